#pragma once

#include <optional>
#include <span>
#include <vector>

#include "xkm/types.hpp"

namespace xkm {

// Points and centers still alive at one node of the tree build, plus the
// per-feature center value ranges. A split candidate for feature i is any
// point or center value in [lo[i], hi[i]); that half-open range is exactly
// the set of thresholds keeping at least one center on each side.
struct NodeWorkset {
  std::vector<int> points;
  std::vector<int> centers;
  std::vector<double> lo;
  std::vector<double> hi;
};

NodeWorkset make_workset(const DataMatrix& x, const Labeling& labels, const CenterSet& c,
                         std::vector<int> points, std::vector<int> centers);

// Points that land on the other side of the threshold than their own center.
long count_mistakes(const DataMatrix& x, std::span<const int> points, const Labeling& labels,
                    const CenterSet& c, int feature, double threshold);

struct SplitChoice {
  int feature = -1;
  double threshold = 0.0;
  long mistakes = 0;
};

// Minimum-mistake split over all features and candidate thresholds of the
// workset. Ties resolve to the lowest feature, then the lowest threshold.
// Requires at least two surviving centers that differ somewhere
// (Unsplittable otherwise).
SplitChoice best_split(const DataMatrix& x, const Labeling& labels, const CenterSet& c,
                       const NodeWorkset& w);

struct ImmStats {
  int depth = 0;
  std::vector<long> mistakes_per_node;  // pre-order over internal nodes
  long total_mistakes = 0;
};

// Builds a threshold tree with exactly one leaf per center by recursively
// taking the minimum-mistake split and discarding the mistaken points
// before recursing. A node becomes a leaf when a single center survives.
// Each internal node records its mistake count, surviving centers, and the
// centers' bounding-box corners. Centers must be pairwise distinct
// (DuplicateCenters otherwise) and k must be at least 2.
ThresholdTree imm_fit(const DataMatrix& x, const CenterSet& c, ImmStats* stats = nullptr);

}  // namespace xkm
