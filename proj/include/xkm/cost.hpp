#pragma once

#include <span>
#include <utility>
#include <vector>

#include "xkm/types.hpp"

namespace xkm {

// Best single center of a cluster: coordinate-wise mean for means,
// coordinate-wise median for medians (even counts take the midpoint of the
// two middle order statistics).
std::vector<double> optimal_center(const DataMatrix& x, std::span<const int> members,
                                   Objective objective);
std::vector<double> optimal_center(const DataMatrix& x, Objective objective);

// Cluster cost around an arbitrary center: sum of l1 distances for medians,
// sum of squared l2 distances for means. Accumulates in long double.
double cluster_cost_around(const DataMatrix& x, std::span<const int> members,
                           std::span<const double> center, Objective objective);

// Cost of a labeled partition with per-cluster optimal centers. k is
// max(label)+1; a label in [0,k) with no members raises EmptyCluster.
CostReport cost_of_partition(const DataMatrix& x, const Labeling& labels, Objective objective);

// Routes every point down the tree and recomputes the optimal center per
// leaf, under the tree's own objective. A leaf with no points raises
// EmptyLeaf. Per-cluster costs are ordered by leaf label.
CostReport cost_of_tree(const DataMatrix& x, const ThresholdTree& tree);

// Sum over points of the distance to their nearest center, in the center
// set's objective. This is the clustering cost of the centers themselves,
// without re-fitting anything.
double cost_of_centers(const DataMatrix& x, const CenterSet& c);

// l1 diameter and squared l2 diameter of the axis-aligned bounding box of
// the selected centers.
std::pair<double, double> bounding_box_diameters(const CenterSet& c, std::span<const int> subset);

}  // namespace xkm
