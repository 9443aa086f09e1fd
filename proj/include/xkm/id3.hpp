#pragma once

#include "xkm/types.hpp"

namespace xkm {

// Entropy-driven decision tree over the labels, grown greedily to at most
// leaf_budget leaves: the open leaf with the largest entropy * size is split
// next (creation order on ties) at the midpoint threshold with maximum
// information gain. Leaves take the majority label, so labels may repeat
// across leaves and leaves may stay impure. The objective only stamps the
// returned tree for serialization and evaluation.
ThresholdTree id3_fit(const DataMatrix& x, const Labeling& labels, int leaf_budget,
                      Objective objective = Objective::means);

}  // namespace xkm
