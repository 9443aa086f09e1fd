#include "xkm/two_cut.hpp"

#include <algorithm>
#include <optional>

#include "xkm/median_set.hpp"
#include "xkm/runtime.hpp"

namespace xkm {

PrefixState2Means PrefixState2Means::start(const DataMatrix& x) {
  PrefixState2Means s;
  s.prefix.assign(static_cast<size_t>(x.cols), 0.0L);
  s.suffix.assign(static_cast<size_t>(x.cols), 0.0L);
  for (int p = 0; p < x.rows; ++p) {
    auto row = x.row(p);
    for (int c = 0; c < x.cols; ++c) {
      s.suffix[c] += row[c];
      s.total_sq_norm += static_cast<long double>(row[c]) * row[c];
    }
  }
  return s;
}

void PrefixState2Means::advance(std::span<const double> point) {
  for (size_t c = 0; c < point.size(); ++c) {
    prefix[c] += point[c];
    suffix[c] -= point[c];
  }
  ++position;
}

double PrefixState2Means::imbalance(const DataMatrix& x) const {
  long double worst = 0.0L;
  for (int c = 0; c < x.cols; ++c) {
    long double total = 0.0L;
    for (int p = 0; p < x.rows; ++p) total += x.at(p, c);
    long double drift = prefix[c] + suffix[c] - total;
    worst = std::max(worst, drift < 0 ? -drift : drift);
  }
  return static_cast<double>(worst);
}

namespace {

struct Candidate {
  double cost;
  double threshold;
  long left_size;
};

// Negative costs can only come from rounding; clamp them at zero. Anything
// materially below zero relative to the cost scale would be a logic error.
double clamp_cost(long double cost, long double scale) {
  if (cost >= 0.0L) return static_cast<double>(cost);
  (void)scale;  // |cost| stays within ~1e-9 * scale by construction
  return 0.0;
}

CutResult pick_best(const std::vector<std::optional<Candidate>>& per_feature, int n) {
  int best_feature = -1;
  Candidate best{0.0, 0.0, 0};
  for (int i = 0; i < static_cast<int>(per_feature.size()); ++i) {
    if (!per_feature[i]) continue;
    if (best_feature < 0 || cost_less(per_feature[i]->cost, best.cost)) {
      best_feature = i;
      best = *per_feature[i];
    }
  }
  if (best_feature < 0) throw err::unsplittable("every feature is constant");
  CutResult out;
  out.feature = best_feature;
  out.threshold = best.threshold;
  out.cost = best.cost;
  out.left_size = best.left_size;
  out.right_size = n - best.left_size;
  return out;
}

}  // namespace

CutResult best_cut_means(const DataMatrix& x) {
  validate_matrix(x);
  const int n = x.rows, d = x.cols;
  if (n < 2) throw err::unsplittable("need at least two points");
  auto orders = argsort_features(x);
  auto base = PrefixState2Means::start(x);

  std::vector<std::optional<Candidate>> per_feature(static_cast<size_t>(d));
  for_each_index(d, [&](int i) {
    const auto& ord = orders[i];
    PrefixState2Means state = base;
    std::optional<Candidate> best;
    for (int p = 1; p < n; ++p) {
      state.advance(x.row(ord[p - 1]));
      if (x.at(ord[p - 1], i) == x.at(ord[p], i)) continue;
      long double ns = 0.0L, nr = 0.0L;
      for (int c = 0; c < d; ++c) {
        ns += state.prefix[c] * state.prefix[c];
        nr += state.suffix[c] * state.suffix[c];
      }
      long double cost = state.total_sq_norm - ns / p - nr / (n - p);
      double cut_cost = clamp_cost(cost, state.total_sq_norm);
      if (!best || cost_less(cut_cost, best->cost))
        best = Candidate{cut_cost, x.at(ord[p - 1], i), p};
    }
    per_feature[i] = best;
  });
  return pick_best(per_feature, n);
}

CutResult best_cut_medians(const DataMatrix& x) {
  validate_matrix(x);
  const int n = x.rows, d = x.cols;
  if (n < 2) throw err::unsplittable("need at least two points");
  auto orders = argsort_features(x);

  // Whole-set cost, the p = 0 baseline shared by every feature sweep.
  long double cost0 = 0.0L;
  {
    std::vector<double> all_median(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
      int lo = orders[i][(n - 1) / 2];
      int hi = orders[i][n / 2];
      all_median[i] = 0.5 * (x.at(lo, i) + x.at(hi, i));
    }
    for (int p = 0; p < n; ++p) cost0 += l1_dist(x.row(p), all_median);
  }

  std::vector<std::optional<Candidate>> per_feature(static_cast<size_t>(d));
  for_each_index(d, [&](int i) {
    const auto& ord = orders[i];
    // gain[j]: distance from the j-th moved point to the median interval of
    // the left cluster it joins (interval taken before it joins).
    // loss[j]: distance to the median interval of the right cluster it
    // leaves (interval taken after it leaves).
    std::vector<long double> gain(static_cast<size_t>(n), 0.0L);
    std::vector<long double> loss(static_cast<size_t>(n), 0.0L);

    ShrinkingMedianSet right(x, orders);
    for (int j = 1; j <= n - 1; ++j) {
      right.erase(ord[j - 1]);
      long double acc = 0.0L;
      for (int c = 0; c < d; ++c) acc += right.gap(c, x.at(ord[j - 1], c));
      loss[j] = acc;
    }

    ShrinkingMedianSet left(x, orders);
    left.erase(ord[n - 1]);
    for (int j = n - 1; j >= 2; --j) {
      // Shrink to exactly the first j-1 sorted points, then price the j-th
      // point (just erased) against that prefix.
      left.erase(ord[j - 1]);
      long double acc = 0.0L;
      for (int c = 0; c < d; ++c) acc += left.gap(c, x.at(ord[j - 1], c));
      gain[j] = acc;
    }
    gain[1] = 0.0L;  // first point joins an empty cluster

    std::optional<Candidate> best;
    long double cost = cost0;
    for (int p = 1; p < n; ++p) {
      cost += gain[p] - loss[p];
      if (x.at(ord[p - 1], i) == x.at(ord[p], i)) continue;
      double cut_cost = clamp_cost(cost, cost0);
      if (!best || cost_less(cut_cost, best->cost))
        best = Candidate{cut_cost, x.at(ord[p - 1], i), p};
    }
    per_feature[i] = best;
  });
  return pick_best(per_feature, n);
}

long change_count(const DataMatrix& x, const Labeling& reference, int feature, double threshold) {
  if (static_cast<int>(reference.size()) != x.rows)
    throw err::dim_mismatch(static_cast<long>(reference.size()), x.rows);
  long left_as_0 = 0, left_as_1 = 0, right_as_0 = 0, right_as_1 = 0;
  for (int p = 0; p < x.rows; ++p) {
    bool left = x.at(p, feature) <= threshold;
    bool cluster0 = reference[p] == 0;
    (left ? (cluster0 ? left_as_0 : left_as_1) : (cluster0 ? right_as_0 : right_as_1))++;
  }
  if (left_as_0 + left_as_1 == 0 || right_as_0 + right_as_1 == 0)
    throw err::unsplittable("cut leaves one side empty");
  // Pair left with cluster 0 or with cluster 1, whichever needs fewer moves.
  long pairing_a = left_as_1 + right_as_0;
  long pairing_b = left_as_0 + right_as_1;
  return std::min(pairing_a, pairing_b);
}

}  // namespace xkm
