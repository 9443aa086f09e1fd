#include "xkm/cost.hpp"

#include <algorithm>
#include <map>

namespace xkm {

std::vector<double> optimal_center(const DataMatrix& x, std::span<const int> members,
                                   Objective objective) {
  if (members.empty()) throw err::empty_cluster(-1);
  const int d = x.cols;
  std::vector<double> center(static_cast<size_t>(d), 0.0);
  if (objective == Objective::means) {
    for (int c = 0; c < d; ++c) {
      long double acc = 0.0L;
      for (int p : members) acc += x.at(p, c);
      center[c] = static_cast<double>(acc / static_cast<long double>(members.size()));
    }
  } else {
    std::vector<double> vals(members.size());
    for (int c = 0; c < d; ++c) {
      for (size_t i = 0; i < members.size(); ++i) vals[i] = x.at(members[i], c);
      std::sort(vals.begin(), vals.end());
      size_t m = vals.size();
      center[c] = (m % 2 == 1) ? vals[m / 2] : 0.5 * (vals[m / 2 - 1] + vals[m / 2]);
    }
  }
  return center;
}

std::vector<double> optimal_center(const DataMatrix& x, Objective objective) {
  std::vector<int> all(static_cast<size_t>(x.rows));
  for (int i = 0; i < x.rows; ++i) all[i] = i;
  return optimal_center(x, all, objective);
}

double cluster_cost_around(const DataMatrix& x, std::span<const int> members,
                           std::span<const double> center, Objective objective) {
  if (static_cast<int>(center.size()) != x.cols)
    throw err::dim_mismatch(static_cast<long>(center.size()), x.cols);
  long double acc = 0.0L;
  for (int p : members) acc += objective_dist(x.row(p), center, objective);
  return static_cast<double>(acc);
}

CostReport cost_of_partition(const DataMatrix& x, const Labeling& labels, Objective objective) {
  if (static_cast<int>(labels.size()) != x.rows)
    throw err::dim_mismatch(static_cast<long>(labels.size()), x.rows);
  int k = 0;
  for (int l : labels) {
    if (l < 0) throw err::empty_cluster(l);
    k = std::max(k, l + 1);
  }
  std::vector<std::vector<int>> clusters(static_cast<size_t>(k));
  for (int p = 0; p < x.rows; ++p) clusters[labels[p]].push_back(p);

  CostReport report;
  long double total = 0.0L;
  for (int j = 0; j < k; ++j) {
    if (clusters[j].empty()) throw err::empty_cluster(j);
    auto center = optimal_center(x, clusters[j], objective);
    double cost = cluster_cost_around(x, clusters[j], center, objective);
    report.per_cluster_cost.push_back(cost);
    total += cost;
  }
  report.total_cost = static_cast<double>(total);
  return report;
}

CostReport cost_of_tree(const DataMatrix& x, const ThresholdTree& tree) {
  const Objective objective = tree.objective;
  auto leaf_nodes = tree.leaves();
  std::map<const TreeNode*, std::vector<int>> members;
  for (int p = 0; p < x.rows; ++p) members[tree.route(x.row(p))].push_back(p);

  // Leaves ordered by label; pre-order settles duplicates (relevant only for
  // greedy trees whose leaf labels may repeat).
  std::stable_sort(leaf_nodes.begin(), leaf_nodes.end(),
                   [](const TreeNode* a, const TreeNode* b) { return a->leaf_label < b->leaf_label; });

  CostReport report;
  long double total = 0.0L;
  for (const TreeNode* leaf : leaf_nodes) {
    auto it = members.find(leaf);
    if (it == members.end() || it->second.empty()) throw err::empty_leaf(leaf->leaf_label);
    auto center = optimal_center(x, it->second, objective);
    double cost = cluster_cost_around(x, it->second, center, objective);
    report.per_cluster_cost.push_back(cost);
    total += cost;
  }
  report.total_cost = static_cast<double>(total);
  return report;
}

double cost_of_centers(const DataMatrix& x, const CenterSet& c) {
  if (x.cols != c.dim()) throw err::dim_mismatch(x.cols, c.dim());
  long double acc = 0.0L;
  for (int p = 0; p < x.rows; ++p) {
    auto row = x.row(p);
    double best = objective_dist(row, c.centers.row(0), c.objective);
    for (int j = 1; j < c.k(); ++j)
      best = std::min(best, objective_dist(row, c.centers.row(j), c.objective));
    acc += best;
  }
  return static_cast<double>(acc);
}

std::pair<double, double> bounding_box_diameters(const CenterSet& c, std::span<const int> subset) {
  if (subset.empty()) throw err::empty_index_set("bounding box");
  const int d = c.dim();
  double diam1 = 0.0, diam2sq = 0.0;
  for (int i = 0; i < d; ++i) {
    double lo = c.centers.at(subset[0], i), hi = lo;
    for (int j : subset) {
      lo = std::min(lo, c.centers.at(j, i));
      hi = std::max(hi, c.centers.at(j, i));
    }
    diam1 += hi - lo;
    diam2sq += (hi - lo) * (hi - lo);
  }
  return {diam1, diam2sq};
}

}  // namespace xkm
