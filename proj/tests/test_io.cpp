#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <unistd.h>

#include "xkm/io.hpp"

using namespace xkm;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("xkm_io_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

ThresholdTree sample_tree() {
  auto root = std::make_unique<TreeNode>();
  root->feature = 0;
  root->threshold = 0.5;
  root->left = std::make_unique<TreeNode>();
  root->left->leaf_label = 0;
  root->right = std::make_unique<TreeNode>();
  root->right->feature = 2;
  root->right->threshold = -1.25;
  root->right->left = std::make_unique<TreeNode>();
  root->right->left->leaf_label = 1;
  root->right->right = std::make_unique<TreeNode>();
  root->right->right->leaf_label = 2;
  return ThresholdTree(Objective::medians, 3, std::move(root));
}

}  // namespace

TEST_CASE("csv round trip is byte-stable") {
  std::istringstream in("0.1,-2,3e8\n4,5.25,-0.000001\n");
  auto x = read_csv(in);
  REQUIRE(x.rows == 2);
  REQUIRE(x.cols == 3);
  CHECK(x.at(0, 2) == 3e8);
  CHECK(x.at(1, 2) == -0.000001);

  std::ostringstream out1, out2;
  write_csv(out1, x);
  std::istringstream back(out1.str());
  write_csv(out2, read_csv(back));
  CHECK(out1.str() == out2.str());
}

TEST_CASE("csv parsing errors carry position and kind") {
  std::istringstream ragged("1,2\n3\n");
  try {
    read_csv(ragged);
    FAIL("expected RaggedRow");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::RaggedRow);
  }

  std::istringstream junk("1,green\n");
  try {
    read_csv(junk);
    FAIL("expected Io");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::Io);
  }

  std::istringstream empty("");
  CHECK_THROWS_AS(read_csv(empty), Error);

  // Header skipping and CRLF endings.
  std::istringstream windows("a,b\r\n1,2\r\n");
  auto x = read_csv(windows, true);
  CHECK(x.rows == 1);
  CHECK(x.at(0, 1) == 2.0);

  CHECK_THROWS_AS(read_csv_file("/nonexistent/path.csv"), Error);
}

TEST_CASE("labels file round trip") {
  TempDir dir;
  auto path = dir.file("labels.txt");
  Labeling labels{0, 2, 1, 1};
  write_labels_file(path, labels);
  CHECK(read_labels_file(path) == labels);

  write_text_file(path, "0\nx\n");
  CHECK_THROWS_AS(read_labels_file(path), Error);
}

TEST_CASE("tree json round trip preserves structure and bytes") {
  auto tree = sample_tree();
  auto text = tree_to_json(tree);
  auto parsed = tree_from_json(text);
  CHECK(parsed.objective == Objective::medians);
  CHECK(parsed.k == 3);
  CHECK(tree_to_json(parsed) == text);

  std::vector<double> probe{0.4, 0.0, 0.0};
  CHECK(parsed.predict(probe) == tree.predict(probe));
}

TEST_CASE("model json rejects malformed input") {
  CHECK_THROWS_AS(tree_from_json("not json at all"), Error);
  CHECK_THROWS_AS(tree_from_json("{\"objective\":\"means\",\"k\":2}"), Error);
  CHECK_THROWS_AS(tree_from_json(R"({"objective":"means","k":2,"root":{"leaf":0}})"), Error);
  CHECK_THROWS_AS(
      tree_from_json(
          R"({"objective":"sums","k":2,"root":{"feature":0,"threshold":0,"left":{"leaf":0},"right":{"leaf":1}}})"),
      Error);
  CHECK_THROWS_AS(
      tree_from_json(
          R"({"objective":"means","k":2,"root":{"feature":0,"threshold":0,"left":{"leaf":0},"right":{"leaf":0}}})"),
      Error);

  try {
    tree_from_json("{]");
    FAIL("expected BadModel");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::BadModel);
  }
}

TEST_CASE("cut json has a fixed field order") {
  CutResult cut;
  cut.feature = 1;
  cut.threshold = 2.5;
  cut.cost = 7.0;
  cut.left_size = 3;
  cut.right_size = 4;
  auto text = cut_to_json(cut, Objective::means);
  CHECK(text ==
        "{\n  \"model\": \"cut\",\n  \"objective\": \"means\",\n  \"feature\": 1,\n"
        "  \"threshold\": 2.5,\n  \"cost\": 7.0,\n  \"left_size\": 3,\n  \"right_size\": 4\n}\n");

  cut.changes = 2;
  CHECK(cut_to_json(cut, Objective::means).find("\"changes\": 2") != std::string::npos);
}

TEST_CASE("graphviz export is deterministic") {
  auto tree = sample_tree();
  auto dot = tree_to_dot(tree);
  CHECK(dot == tree_to_dot(tree));
  CHECK(dot.find("digraph threshold_tree {") == 0);
  CHECK(dot.find("n0 [label=\"x0 <= 0.5\"]") != std::string::npos);
  CHECK(dot.find("shape=box, label=\"cluster 2\"") != std::string::npos);

  // One node per tree node, one edge per child link.
  size_t nodes = 0, edges = 0, pos = 0;
  while ((pos = dot.find("\n  n", pos)) != std::string::npos) {
    ++pos;
    if (dot.find("->", pos) < dot.find('[', pos))
      ++edges;
    else
      ++nodes;
  }
  CHECK(nodes == 5);
  CHECK(edges == 4);
}

TEST_CASE("tree file io") {
  TempDir dir;
  auto path = dir.file("model.json");
  auto tree = sample_tree();
  write_tree_file(path, tree);
  auto loaded = read_tree_file(path);
  CHECK(tree_to_json(loaded) == tree_to_json(tree));
}
