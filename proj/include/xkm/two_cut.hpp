#pragma once

#include <span>
#include <vector>

#include "xkm/types.hpp"

namespace xkm {

// Running state of the means sweep along one feature: vector sums of the
// points at or below the current position and of the rest. With
// u = sum of squared point norms, the 2-means cost of splitting after
// position p is   u - |prefix|^2 / p - |suffix|^2 / (n - p).
struct PrefixState2Means {
  std::vector<long double> prefix;
  std::vector<long double> suffix;
  long double total_sq_norm = 0.0L;
  int position = 0;

  static PrefixState2Means start(const DataMatrix& x);
  void advance(std::span<const double> point);
  // Max coordinate drift of prefix+suffix from the fixed total (diagnostic).
  double imbalance(const DataMatrix& x) const;
};

// Minimum-cost single threshold cut under the means objective. Thresholds
// are data values; a position is a candidate only when the next sorted value
// differs. Ties resolve to the lowest feature index, then the lowest
// threshold. Raises Unsplittable when every feature is constant.
CutResult best_cut_means(const DataMatrix& x);

// Same search under the medians objective. Cluster medians are maintained
// incrementally: the cost change of moving a point across the cut is its
// distance to the median interval of the gaining cluster minus its distance
// to the median interval of the losing cluster, both taken without the
// point itself.
CutResult best_cut_medians(const DataMatrix& x);

// Changes needed to turn the cut's two sides into the reference
// 2-clustering: symmetric-difference size under the better of the two
// side-to-cluster pairings.
long change_count(const DataMatrix& x, const Labeling& reference, int feature, double threshold);

}  // namespace xkm
