#include "xkm/reference.hpp"

#include <algorithm>

#include "xkm/cost.hpp"
#include "xkm/rng.hpp"

namespace xkm {

CenterSet kmeanspp_seed(const DataMatrix& x, int k, Objective objective, std::uint64_t seed) {
  validate_matrix(x);
  if (k < 1) throw err::k_too_large(k, x.rows);
  if (k > x.rows) throw err::k_too_large(k, x.rows);
  Rng rng(seed);

  std::vector<int> chosen;
  std::vector<char> is_chosen(static_cast<size_t>(x.rows), 0);
  std::vector<double> weight(static_cast<size_t>(x.rows), 0.0);

  int first = static_cast<int>(rng.index(x.rows));
  chosen.push_back(first);
  is_chosen[first] = 1;

  while (static_cast<int>(chosen.size()) < k) {
    long double total = 0.0L;
    int last = chosen.back();
    for (int p = 0; p < x.rows; ++p) {
      double dist = objective_dist(x.row(p), x.row(last), objective);
      if (chosen.size() == 1 || dist < weight[p]) weight[p] = dist;
      if (is_chosen[p]) weight[p] = 0.0;
      total += weight[p];
    }
    int pick = -1;
    if (total > 0.0L) {
      long double r = static_cast<long double>(rng.u01()) * total;
      long double acc = 0.0L;
      for (int p = 0; p < x.rows; ++p) {
        acc += weight[p];
        if (acc > r && weight[p] > 0.0) {
          pick = p;
          break;
        }
      }
      if (pick < 0) {  // rounding pushed r past the last positive weight
        for (int p = x.rows - 1; p >= 0; --p)
          if (weight[p] > 0.0) {
            pick = p;
            break;
          }
      }
    }
    if (pick < 0) {  // all remaining points coincide with a chosen center
      for (int p = 0; p < x.rows; ++p)
        if (!is_chosen[p]) {
          pick = p;
          break;
        }
    }
    chosen.push_back(pick);
    is_chosen[pick] = 1;
  }

  Matrix centers(k, x.cols);
  for (int j = 0; j < k; ++j)
    for (int c = 0; c < x.cols; ++c) centers.at(j, c) = x.at(chosen[j], c);
  return CenterSet{std::move(centers), objective};
}

LloydResult lloyd_refine(const DataMatrix& x, const CenterSet& init, int max_iters, double tol) {
  validate_matrix(x);
  if (x.cols != init.dim()) throw err::dim_mismatch(x.cols, init.dim());
  if (init.k() > x.rows) throw err::k_too_large(init.k(), x.rows);

  LloydResult result;
  result.centers = init;
  const int k = init.k();

  Labeling labels = assign_labels(x, result.centers);
  double prev_cost = cost_of_centers(x, result.centers);
  result.labels = labels;
  result.cost_history.push_back(prev_cost);

  for (int iter = 0; iter < max_iters; ++iter) {
    // Update step: optimal center of each cluster.
    std::vector<std::vector<int>> members(static_cast<size_t>(k));
    for (int p = 0; p < x.rows; ++p) members[labels[p]].push_back(p);
    for (int j = 0; j < k; ++j) {
      if (members[j].empty()) continue;  // reseated below
      auto center = optimal_center(x, members[j], init.objective);
      for (int c = 0; c < x.cols; ++c) result.centers.centers.at(j, c) = center[c];
    }
    // Reseat empty clusters at the point farthest from its own center.
    std::vector<char> used(static_cast<size_t>(x.rows), 0);
    for (int j = 0; j < k; ++j) {
      if (!members[j].empty()) continue;
      int far = -1;
      double far_dist = -1.0;
      for (int p = 0; p < x.rows; ++p) {
        if (used[p]) continue;
        double dist = objective_dist(x.row(p), result.centers.centers.row(labels[p]),
                                     init.objective);
        if (dist > far_dist) {
          far_dist = dist;
          far = p;
        }
      }
      for (int c = 0; c < x.cols; ++c) result.centers.centers.at(j, c) = x.at(far, c);
      used[far] = 1;
    }

    Labeling next = assign_labels(x, result.centers);
    double cost = cost_of_centers(x, result.centers);
    result.iterations = iter + 1;
    result.cost_history.push_back(cost);
    bool stable = next == labels;
    labels = std::move(next);
    result.labels = labels;
    if (stable) break;
    if (prev_cost > 0.0 && (prev_cost - cost) / prev_cost < tol) break;
    if (prev_cost == 0.0) break;
    prev_cost = cost;
  }
  return result;
}

}  // namespace xkm
