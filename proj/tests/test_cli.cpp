#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace {

namespace fs = std::filesystem;

struct Workspace {
  fs::path dir;
  Workspace() {
    dir = fs::temp_directory_path() / ("xkm_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Workspace() { fs::remove_all(dir); }
  std::string file(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args, const std::string& stdout_file = "/dev/null") {
  std::string cmd = std::string(XKM_BIN) + " " + args + " >" + stdout_file + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("gen writes the expected rows") {
  Workspace ws;
  auto csv = ws.file("lb.csv");
  CHECK(run("gen --family lb2 --d 3 --out " + csv + " --labels-out " + ws.file("lb.labels"),
            ws.file("summary.json")) == 0);
  CHECK(slurp(csv) == "0,-1,-1\n-1,0,-1\n-1,-1,0\n0,1,1\n1,0,1\n1,1,0\n");
  CHECK(slurp(ws.file("lb.labels")) == "0\n0\n0\n1\n1\n1\n");
  auto summary = slurp(ws.file("summary.json"));
  CHECK(summary.find("\"family\":\"lb2\"") != std::string::npos);
  CHECK(summary.find("\"n\":6") != std::string::npos);
}

TEST_CASE("gen is deterministic per seed") {
  Workspace ws;
  auto a = ws.file("a.csv"), b = ws.file("b.csv"), c = ws.file("c.csv");
  CHECK(run("gen --family mixture --k 3 --d 4 --n 50 --seed 9 --out " + a) == 0);
  CHECK(run("gen --family mixture --k 3 --d 4 --n 50 --seed 9 --out " + b) == 0);
  CHECK(run("gen --family mixture --k 3 --d 4 --n 50 --seed 10 --out " + c) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) != slurp(c));
}

TEST_CASE("fit twocut produces a stable model file") {
  Workspace ws;
  auto csv = ws.file("lb.csv");
  REQUIRE(run("gen --family lb2 --d 3 --out " + csv + " --labels-out " + ws.file("lb.labels")) == 0);

  auto model = ws.file("cut.json");
  CHECK(run("fit --algo twocut --objective medians --in " + csv + " --labels " +
            ws.file("lb.labels") + " --out " + model) == 0);
  auto text = slurp(model);
  CHECK(text.find("\"feature\": 0") != std::string::npos);
  CHECK(text.find("\"threshold\": -1.0") != std::string::npos);
  CHECK(text.find("\"cost\": 10.0") != std::string::npos);
  CHECK(text.find("\"changes\": 1") != std::string::npos);
  CHECK(fs::exists(model + ".stats.json"));
}

TEST_CASE("fit, eval, export pipeline on a separable mixture") {
  Workspace ws;
  auto csv = ws.file("mix.csv");
  REQUIRE(run("gen --family mixture --k 3 --d 3 --n 90 --separation 100 --jitter 0.5 --seed 2 "
              "--out " + csv) == 0);

  auto centers = ws.file("centers.json");
  auto tree = ws.file("tree.json");
  REQUIRE(run("fit --algo kmeans --k 3 --seed 4 --in " + csv + " --out " + centers) == 0);
  REQUIRE(run("fit --algo imm --k 3 --seed 4 --in " + csv + " --out " + tree) == 0);

  auto eval_out = ws.file("eval.json");
  CHECK(run("eval --model " + tree + " --in " + csv + " --reference " + centers, eval_out) == 0);
  auto eval_text = slurp(eval_out);
  CHECK(eval_text.find("\"ratio\": 1.0") != std::string::npos);
  CHECK(eval_text.find("\"ratio_bound\":") != std::string::npos);

  auto dot = ws.file("tree.dot");
  CHECK(run("export --model " + tree + " --out " + dot) == 0);
  auto dot_text = slurp(dot);
  size_t leaves = 0, pos = 0;
  while ((pos = dot_text.find("shape=box", pos)) != std::string::npos) {
    ++leaves;
    ++pos;
  }
  CHECK(leaves == 3);

  // Stats file reports the mistake breakdown.
  auto stats = slurp(tree + ".stats.json");
  CHECK(stats.find("\"total_mistakes\": 0") != std::string::npos);
  CHECK(stats.find("\"diam_l1\":") != std::string::npos);
}

TEST_CASE("eval of a cut model routes as a two-leaf tree") {
  Workspace ws;
  auto csv = ws.file("lb.csv");
  REQUIRE(run("gen --family lb2 --d 3 --out " + csv) == 0);
  auto model = ws.file("cut.json");
  REQUIRE(run("fit --algo twocut --objective medians --in " + csv + " --out " + model) == 0);

  auto eval_out = ws.file("eval.json");
  CHECK(run("eval --model " + model + " --in " + csv, eval_out) == 0);
  auto text = slurp(eval_out);
  CHECK(text.find("\"model\": \"cut\"") != std::string::npos);
  CHECK(text.find("\"cost\": 10.0") != std::string::npos);
  CHECK(text.find("\"ratio_bound\"") == std::string::npos);
}

TEST_CASE("exit codes distinguish usage, input, and algorithm failures") {
  Workspace ws;
  CHECK(run("gen --family lb2 --d 3") == 2);                       // missing --out
  CHECK(run("frobnicate") == 2);                                   // unknown subcommand
  CHECK(run("fit --algo imm --k 3 --in /no/such.csv --out " + ws.file("t.json")) == 3);

  auto bad_model = ws.file("bad.json");
  std::ofstream(bad_model) << "{\"model\":\"tree\",\"k\":2}";
  CHECK(run("eval --model " + bad_model + " --in /no/such.csv") == 3);

  auto csv = ws.file("lb.csv");
  REQUIRE(run("gen --family lb2 --d 2 --out " + csv) == 0);
  CHECK(run("eval --model " + bad_model + " --in " + csv) == 3);   // BadModel
  CHECK(run("fit --algo imm --k 30 --in " + csv + " --out " + ws.file("t.json")) == 4);

  // Constant data cannot be cut.
  auto flat = ws.file("flat.csv");
  std::ofstream(flat) << "1,1\n1,1\n";
  CHECK(run("fit --algo twocut --in " + flat + " --out " + ws.file("c.json")) == 4);
}

TEST_CASE("thread flag changes nothing but wall time") {
  Workspace ws;
  auto csv = ws.file("mix.csv");
  REQUIRE(run("gen --family mixture --k 4 --d 6 --n 400 --seed 5 --out " + csv) == 0);

  auto t1 = ws.file("t1.json"), t4 = ws.file("t4.json");
  REQUIRE(run("fit --algo imm --k 4 --seed 8 --in " + csv + " --out " + t1) == 0);
  REQUIRE(run("--threads 4 fit --algo imm --k 4 --seed 8 --in " + csv + " --out " + t4) == 0);
  CHECK(slurp(t1) == slurp(t4));
}

TEST_CASE("bench emits one csv row per repetition") {
  Workspace ws;
  auto out = ws.file("bench.csv");
  CHECK(run("bench --n 200,400 --d 4 --k 3 --reps 2 --seed 1", out) == 0);
  auto text = slurp(out);
  CHECK(text.rfind("n,d,k,rep,seconds,cost", 0) == 0);
  size_t lines = 0, pos = 0;
  while ((pos = text.find('\n', pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  CHECK(lines == 5);  // header + 2 sizes x 2 reps
}
