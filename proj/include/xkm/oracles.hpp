#pragma once

#include "xkm/types.hpp"

namespace xkm::oracle {

// Reference implementations used only to check the fast modules. They share
// the cut definition and tie policy but recompute every center and cost
// from scratch with their own code, so a bug cannot hide in a shared path.

// Exhaustive threshold-cut search: every feature, every boundary between
// distinct sorted values, both sides re-costed from scratch.
CutResult naive_best_cut(const DataMatrix& x, Objective objective);

struct PartitionResult {
  Labeling labels;
  double cost = 0.0;
};

// Minimum-cost partition into at most k nonempty clusters by enumerating
// restricted-growth strings. Guarded by a 10^6 partition-count cap
// (TooLarge). First enumerated optimum wins ties.
PartitionResult brute_opt_partition(const DataMatrix& x, int k, Objective objective);

struct TreeSearchResult {
  ThresholdTree tree;
  double cost = 0.0;
};

// Minimum-cost threshold tree with exactly k nonempty leaves, enumerating
// every shape and every boundary threshold. Guarded to n <= 10, k <= 3,
// d <= 3.
TreeSearchResult brute_best_tree(const DataMatrix& x, int k, Objective objective);

// Let t be the minimum number of changes any single threshold cut needs to
// reproduce the given 2-clustering. Checks that, in the chosen coordinate,
// the t highest points of the low-center cluster can be matched one-to-one
// to points of the other cluster sitting at or below them. Verified by
// maximum bipartite matching; guarded to n <= 40.
bool verify_matching_lemma(const DataMatrix& x, const Labeling& two_clustering, int coordinate,
                           Objective objective);

}  // namespace xkm::oracle
