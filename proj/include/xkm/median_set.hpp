#pragma once

#include <utility>
#include <vector>

#include "xkm/types.hpp"

namespace xkm {

// Coordinate-wise medians of a point set that only ever shrinks.
//
// One doubly-linked list per coordinate, threaded through the points in
// sorted order, plus a pointer to the lower-middle element. Erasing a point
// unlinks it from every list and nudges each middle pointer by at most one
// position, so erase costs O(d) and reading a median interval costs O(1).
// Rebuilding for a fresh sweep (reset) costs O(nd).
class ShrinkingMedianSet {
 public:
  // orders[i] must list all row indices of x sorted by (value in coordinate
  // i, row index) — the layout argsort_features() produces.
  ShrinkingMedianSet(const DataMatrix& x, const std::vector<std::vector<int>>& orders);

  void reset();
  void erase(int point);
  int size() const { return size_; }

  // [lower median, upper median] of coordinate i; the two coincide for odd
  // sizes. Undefined on an empty set (raises EmptyIndexSet).
  std::pair<double, double> median_interval(int i) const;
  double median(int i) const {
    auto [lo, hi] = median_interval(i);
    return 0.5 * (lo + hi);
  }

  // Distance from v to the median interval of coordinate i (zero inside).
  double gap(int i, double v) const {
    auto [lo, hi] = median_interval(i);
    if (v < lo) return lo - v;
    if (v > hi) return v - hi;
    return 0.0;
  }

 private:
  int n_ = 0;
  int d_ = 0;
  int size_ = 0;
  // Per coordinate, nodes are identified by their rank in the initial sorted
  // order, so "is node a before node b" is an integer comparison.
  std::vector<std::vector<double>> value_;  // [i][rank]
  std::vector<std::vector<int>> rank_of_;   // [i][point]
  std::vector<std::vector<int>> prev_;      // [i][rank]
  std::vector<std::vector<int>> next_;      // [i][rank]
  std::vector<int> mid_;                    // [i] rank of the lower middle, -1 when empty
};

}  // namespace xkm
