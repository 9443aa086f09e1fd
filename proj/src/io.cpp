#include "xkm/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace xkm {

namespace {

double parse_double(const std::string& token, long row, long col) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  while (first < last && (*first == ' ' || *first == '\t')) ++first;
  while (last > first && (last[-1] == ' ' || last[-1] == '\t' || last[-1] == '\r')) --last;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw err::io("row " + std::to_string(row + 1) + ", column " + std::to_string(col + 1) +
                  ": not a number: '" + token + "'");
  return value;
}

}  // namespace

DataMatrix read_csv(std::istream& in, bool header) {
  std::vector<std::vector<double>> rows;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (header && line_no == 1) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    size_t start = 0;
    long col = 0;
    while (true) {
      size_t comma = line.find(',', start);
      std::string token = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      row.push_back(parse_double(token, static_cast<long>(rows.size()), col));
      ++col;
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return validate_dataset(rows);
}

DataMatrix read_csv_file(const std::string& path, bool header) {
  std::ifstream in(path);
  if (!in) throw err::io("cannot open " + path);
  return read_csv(in, header);
}

void write_csv(std::ostream& out, const Matrix& m) {
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) {
      if (c) out << ',';
      out << format_double(m.at(r, c));
    }
    out << '\n';
  }
}

void write_csv_file(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw err::io("cannot open " + path + " for writing");
  write_csv(out, m);
}

Labeling read_labels_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw err::io("cannot open " + path);
  Labeling labels;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc() || ptr != line.data() + line.size())
      throw err::io(path + ": not an integer label: '" + line + "'");
    labels.push_back(value);
  }
  if (labels.empty()) throw err::io(path + ": no labels");
  return labels;
}

void write_labels_file(const std::string& path, const Labeling& labels) {
  std::ofstream out(path);
  if (!out) throw err::io("cannot open " + path + " for writing");
  for (int label : labels) out << label << '\n';
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json node_to_json(const TreeNode* node) {
  ordered_json j;
  if (node->is_leaf()) {
    j["leaf"] = node->leaf_label;
    return j;
  }
  j["feature"] = node->feature;
  j["threshold"] = node->threshold;
  j["left"] = node_to_json(node->left.get());
  j["right"] = node_to_json(node->right.get());
  return j;
}

std::unique_ptr<TreeNode> node_from_json(const ordered_json& j) {
  auto node = std::make_unique<TreeNode>();
  if (j.contains("leaf")) {
    if (!j["leaf"].is_number_integer()) throw err::bad_model("leaf label must be an integer");
    node->leaf_label = j["leaf"].get<int>();
    return node;
  }
  if (!j.contains("feature") || !j.contains("threshold") || !j.contains("left") || !j.contains("right"))
    throw err::bad_model("internal node needs feature, threshold, left, right");
  if (!j["feature"].is_number_integer() || !j["threshold"].is_number())
    throw err::bad_model("feature must be an integer and threshold a number");
  node->feature = j["feature"].get<int>();
  node->threshold = j["threshold"].get<double>();
  node->left = node_from_json(j["left"]);
  node->right = node_from_json(j["right"]);
  return node;
}

}  // namespace

std::string tree_to_json(const ThresholdTree& tree) {
  ordered_json j;
  j["model"] = "tree";
  j["objective"] = objective_name(tree.objective);
  j["k"] = tree.k;
  j["root"] = node_to_json(tree.root.get());
  return j.dump(2) + "\n";
}

ThresholdTree tree_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw err::bad_model(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("objective") || !j.contains("k") || !j.contains("root"))
    throw err::bad_model("model needs objective, k, root");
  if (!j["k"].is_number_integer()) throw err::bad_model("k must be an integer");
  ThresholdTree tree(objective_from_name(j["objective"].get<std::string>()), j["k"].get<int>(),
                     node_from_json(j["root"]));
  tree.validate_clustering_tree();
  return tree;
}

ThresholdTree read_tree_file(const std::string& path) {
  return tree_from_json(read_text_file(path));
}

void write_tree_file(const std::string& path, const ThresholdTree& tree) {
  write_text_file(path, tree_to_json(tree));
}

std::string cut_to_json(const CutResult& cut, Objective objective) {
  ordered_json j;
  j["model"] = "cut";
  j["objective"] = objective_name(objective);
  j["feature"] = cut.feature;
  j["threshold"] = cut.threshold;
  j["cost"] = cut.cost;
  j["left_size"] = cut.left_size;
  j["right_size"] = cut.right_size;
  if (cut.changes) j["changes"] = *cut.changes;
  return j.dump(2) + "\n";
}

namespace {

void node_to_dot(const TreeNode* node, int& next_id, std::ostream& out, int parent, bool is_left) {
  int id = next_id++;
  if (node->is_leaf()) {
    out << "  n" << id << " [shape=box, label=\"cluster " << node->leaf_label << "\"];\n";
  } else {
    out << "  n" << id << " [label=\"x" << node->feature << " <= " << format_double(node->threshold)
        << "\"];\n";
  }
  if (parent >= 0)
    out << "  n" << parent << " -> n" << id << " [label=\"" << (is_left ? "yes" : "no") << "\"];\n";
  if (!node->is_leaf()) {
    node_to_dot(node->left.get(), next_id, out, id, true);
    node_to_dot(node->right.get(), next_id, out, id, false);
  }
}

}  // namespace

std::string tree_to_dot(const ThresholdTree& tree) {
  std::ostringstream out;
  out << "digraph threshold_tree {\n";
  int next_id = 0;
  node_to_dot(tree.root.get(), next_id, out, -1, false);
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw err::io("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw err::io("cannot open " + path + " for writing");
  out << text;
  if (!out) throw err::io("write failed: " + path);
}

}  // namespace xkm
