#include "xkm/types.hpp"

#include <charconv>
#include <numeric>

namespace xkm {

const char* objective_name(Objective o) {
  return o == Objective::medians ? "medians" : "means";
}

Objective objective_from_name(const std::string& name) {
  if (name == "medians") return Objective::medians;
  if (name == "means") return Objective::means;
  throw err::bad_model("unknown objective '" + name + "'");
}

DataMatrix validate_dataset(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw err::empty("no rows");
  const size_t d = rows[0].size();
  if (d == 0) throw err::empty("no columns");
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(d));
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != d) throw err::ragged_row(static_cast<long>(r));
    for (size_t c = 0; c < d; ++c) {
      if (!std::isfinite(rows[r][c])) throw err::non_finite(static_cast<long>(r), static_cast<long>(c));
      m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    }
  }
  return m;
}

void validate_matrix(const Matrix& m) {
  if (m.rows <= 0 || m.cols <= 0) throw err::empty("matrix");
  if (m.values.size() != static_cast<size_t>(m.rows) * m.cols)
    throw err::ragged_row(-1);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (!std::isfinite(m.at(r, c))) throw err::non_finite(r, c);
}

CenterSet make_center_set(Matrix centers, Objective objective) {
  validate_matrix(centers);
  return CenterSet{std::move(centers), objective};
}

Labeling assign_labels(const DataMatrix& x, const CenterSet& c) {
  if (x.cols != c.dim()) throw err::dim_mismatch(x.cols, c.dim());
  Labeling labels(x.rows, 0);
  for (int p = 0; p < x.rows; ++p) {
    auto row = x.row(p);
    double best = objective_dist(row, c.centers.row(0), c.objective);
    int arg = 0;
    for (int j = 1; j < c.k(); ++j) {
      double dist = objective_dist(row, c.centers.row(j), c.objective);
      if (dist < best) {
        best = dist;
        arg = j;
      }
    }
    labels[p] = arg;
  }
  return labels;
}

std::unique_ptr<TreeNode> clone_tree(const TreeNode* node) {
  if (!node) return nullptr;
  auto out = std::make_unique<TreeNode>();
  out->feature = node->feature;
  out->threshold = node->threshold;
  out->leaf_label = node->leaf_label;
  out->mistakes = node->mistakes;
  out->surviving_centers = node->surviving_centers;
  out->box_lo = node->box_lo;
  out->box_hi = node->box_hi;
  out->left = clone_tree(node->left.get());
  out->right = clone_tree(node->right.get());
  return out;
}

static int depth_of(const TreeNode* n) {
  if (!n || n->is_leaf()) return 0;
  return 1 + std::max(depth_of(n->left.get()), depth_of(n->right.get()));
}

int ThresholdTree::depth() const { return depth_of(root.get()); }

static void collect_leaves(const TreeNode* n, std::vector<const TreeNode*>& out) {
  if (!n) return;
  if (n->is_leaf()) {
    out.push_back(n);
    return;
  }
  collect_leaves(n->left.get(), out);
  collect_leaves(n->right.get(), out);
}

std::vector<const TreeNode*> ThresholdTree::leaves() const {
  std::vector<const TreeNode*> out;
  collect_leaves(root.get(), out);
  return out;
}

int ThresholdTree::leaf_count() const { return static_cast<int>(leaves().size()); }

const TreeNode* ThresholdTree::route(std::span<const double> x) const {
  const TreeNode* n = root.get();
  while (!n->is_leaf()) n = x[n->feature] <= n->threshold ? n->left.get() : n->right.get();
  return n;
}

Labeling ThresholdTree::predict_all(const DataMatrix& x) const {
  Labeling out(x.rows);
  for (int p = 0; p < x.rows; ++p) out[p] = predict(x.row(p));
  return out;
}

static void check_partition(const TreeNode* n) {
  if (n->is_leaf()) return;
  if (!n->left || !n->right) throw err::bad_model("internal node with one child");
  if (!n->surviving_centers.empty()) {
    const auto& l = n->left->surviving_centers;
    const auto& r = n->right->surviving_centers;
    // Leaf children record their single label rather than a set.
    std::vector<int> lc = n->left->is_leaf() ? std::vector<int>{n->left->leaf_label} : l;
    std::vector<int> rc = n->right->is_leaf() ? std::vector<int>{n->right->leaf_label} : r;
    if (lc.empty() || rc.empty()) throw err::bad_model("child with empty center set");
    std::vector<int> merged = lc;
    merged.insert(merged.end(), rc.begin(), rc.end());
    std::sort(merged.begin(), merged.end());
    std::vector<int> parent = n->surviving_centers;
    std::sort(parent.begin(), parent.end());
    if (merged != parent) throw err::bad_model("children do not partition parent's centers");
  }
  check_partition(n->left.get());
  check_partition(n->right.get());
}

void ThresholdTree::validate_clustering_tree() const {
  if (!root) throw err::bad_model("no root");
  auto ls = leaves();
  if (static_cast<int>(ls.size()) != k) throw err::bad_model("leaf count != k");
  std::vector<char> seen(static_cast<size_t>(k), 0);
  for (auto* l : ls) {
    if (l->leaf_label < 0 || l->leaf_label >= k) throw err::bad_model("leaf label out of range");
    if (seen[l->leaf_label]) throw err::bad_model("duplicate leaf label");
    seen[l->leaf_label] = 1;
  }
  if (depth() > k - 1) throw err::bad_model("depth exceeds k-1");
  check_partition(root.get());
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<std::vector<int>> argsort_features(const DataMatrix& x) {
  std::vector<std::vector<int>> orders(static_cast<size_t>(x.cols));
  for (int i = 0; i < x.cols; ++i) {
    auto& ord = orders[i];
    ord.resize(static_cast<size_t>(x.rows));
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
      double va = x.at(a, i), vb = x.at(b, i);
      if (va != vb) return va < vb;
      return a < b;
    });
  }
  return orders;
}

}  // namespace xkm
