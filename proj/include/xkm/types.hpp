#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xkm/errors.hpp"

namespace xkm {

enum class Objective { medians, means };

const char* objective_name(Objective o);
Objective objective_from_name(const std::string& name);

// Row-major dense matrix of doubles. Used for datasets and center sets alike.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), values(static_cast<size_t>(r) * c, 0.0) {}

  double at(int r, int c) const { return values[static_cast<size_t>(r) * cols + c]; }
  double& at(int r, int c) { return values[static_cast<size_t>(r) * cols + c]; }
  std::span<const double> row(int r) const {
    return {values.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)};
  }
  std::span<double> row(int r) {
    return {values.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)};
  }
  bool operator==(const Matrix&) const = default;
};

using DataMatrix = Matrix;
using Labeling = std::vector<int>;

// Checks shape and finiteness of raw rows and packs them into a DataMatrix.
DataMatrix validate_dataset(const std::vector<std::vector<double>>& rows);

// Same checks for a matrix that is already packed.
void validate_matrix(const Matrix& m);

struct CenterSet {
  Matrix centers;
  Objective objective = Objective::means;

  int k() const { return centers.rows; }
  int dim() const { return centers.cols; }
};

CenterSet make_center_set(Matrix centers, Objective objective);

inline double l1_dist(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

inline double l2sq_dist(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double diff = a[i] - b[i];
    s += diff * diff;
  }
  return s;
}

// Distance used by an objective: l1 for medians, squared l2 for means.
inline double objective_dist(std::span<const double> a, std::span<const double> b, Objective o) {
  return o == Objective::medians ? l1_dist(a, b) : l2sq_dist(a, b);
}

// Nearest-center labels; exact ties go to the lowest center index.
Labeling assign_labels(const DataMatrix& x, const CenterSet& c);

// Cost comparisons throughout the library share one tolerance: absolute
// 1e-12 or relative 1e-9, whichever is larger.
inline double cost_tol(double a, double b) {
  return std::max(1e-12, 1e-9 * std::max(std::abs(a), std::abs(b)));
}
inline bool cost_less(double a, double b) { return a < b - cost_tol(a, b); }
inline bool cost_close(double a, double b) { return std::abs(a - b) <= cost_tol(a, b); }

// One node of an axis-aligned binary split tree. Points with
// x[feature] <= threshold go left. Leaves carry a cluster label.
// The diagnostic fields are filled in by the tree builder: the number of
// points discarded at the split, which centers were still alive, and the
// coordinate-wise min/max corners of those centers.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  std::unique_ptr<TreeNode> left;
  std::unique_ptr<TreeNode> right;
  int leaf_label = -1;

  long mistakes = 0;
  std::vector<int> surviving_centers;
  std::vector<double> box_lo;
  std::vector<double> box_hi;

  bool is_leaf() const { return left == nullptr; }
};

std::unique_ptr<TreeNode> clone_tree(const TreeNode* node);

// Binary threshold tree with k leaves. Produced by the tree builders;
// clustering trees additionally satisfy validate_clustering_tree().
struct ThresholdTree {
  Objective objective = Objective::means;
  int k = 0;
  std::unique_ptr<TreeNode> root;

  ThresholdTree() = default;
  ThresholdTree(Objective o, int k, std::unique_ptr<TreeNode> r)
      : objective(o), k(k), root(std::move(r)) {}
  ThresholdTree(const ThresholdTree& other)
      : objective(other.objective), k(other.k), root(clone_tree(other.root.get())) {}
  ThresholdTree& operator=(const ThresholdTree& other) {
    objective = other.objective;
    k = other.k;
    root = clone_tree(other.root.get());
    return *this;
  }
  ThresholdTree(ThresholdTree&&) = default;
  ThresholdTree& operator=(ThresholdTree&&) = default;

  int depth() const;
  int leaf_count() const;

  // Walks x down the tree; always ends at exactly one leaf.
  const TreeNode* route(std::span<const double> x) const;
  int predict(std::span<const double> x) const { return route(x)->leaf_label; }
  Labeling predict_all(const DataMatrix& x) const;

  // Leaves in pre-order (left before right).
  std::vector<const TreeNode*> leaves() const;

  // Enforces the clustering-tree shape: exactly k leaves labeled by a
  // permutation of 0..k-1, depth at most k-1, and, where the builder
  // recorded surviving-center sets, children partition their parent.
  void validate_clustering_tree() const;
};

struct CutResult {
  int feature = -1;
  double threshold = 0.0;
  double cost = 0.0;
  long left_size = 0;
  long right_size = 0;
  std::optional<long> changes;
};

struct CostReport {
  double total_cost = 0.0;
  std::vector<double> per_cluster_cost;
  std::optional<double> reference_cost;
  std::optional<double> ratio;

  // Sets the reference and, when it is nonzero, the ratio.
  void set_reference(double ref) {
    reference_cost = ref;
    if (ref > 0.0) ratio = total_cost / ref;
  }
};

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// Per-feature argsort of the rows: result[i] lists row indices ordered by
// (value in feature i, row index).
std::vector<std::vector<int>> argsort_features(const DataMatrix& x);

}  // namespace xkm
