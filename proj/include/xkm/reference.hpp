#pragma once

#include <cstdint>
#include <vector>

#include "xkm/types.hpp"

namespace xkm {

// Distance-weighted seeding over data points: the first center is uniform,
// each next one is drawn with probability proportional to the distance from
// the nearest chosen center (squared l2 for means, l1 for medians). Seeds
// are k distinct point indices; when every remaining point sits at distance
// zero the lowest unchosen index is taken.
CenterSet kmeanspp_seed(const DataMatrix& x, int k, Objective objective, std::uint64_t seed);

struct LloydResult {
  CenterSet centers;
  Labeling labels;
  std::vector<double> cost_history;  // assignment cost after each iteration
  int iterations = 0;
};

// Alternates nearest-center assignment with per-cluster optimal centers.
// A cluster that loses all points is reseated at the point farthest from
// its assigned center (lowest index on ties), so no cluster stays empty.
// Stops when the relative cost improvement drops below tol, labels stop
// changing, or max_iters is reached. Cost never increases between
// iterations.
LloydResult lloyd_refine(const DataMatrix& x, const CenterSet& init, int max_iters = 100,
                         double tol = 1e-6);

}  // namespace xkm
