#pragma once

#include <cstdint>
#include <vector>

#include "xkm/types.hpp"

namespace xkm {

struct LabeledDataset {
  DataMatrix x;
  Labeling labels;
};

struct MixtureDataset {
  DataMatrix x;
  Labeling labels;
  Matrix blob_centers;
};

struct CodewordDataset {
  DataMatrix x;
  Labeling labels;
  Matrix codewords;
  int attempts = 1;
};

// Per-draw report of the structural checks on a codeword matrix.
struct CodewordPropertyReport {
  bool distance_ok = false;       // every pair disagrees on >= d/4 coordinates
  long min_pair_disagreement = 0;
  double required_disagreement = 0.0;
  bool balance_ok = false;        // sign patterns on small coordinate subsets
  bool balance_vacuous = false;   // all balance thresholds were <= 0
  int l_checked = 0;
  bool ok() const { return distance_ok && balance_ok; }
};

// k standard basis vectors minus the last one, plus the origin, in k-1
// dimensions: row j < k-1 is e_{j+1}, row k-1 is 0. Label = row index.
// Separating all k points requires chaining k-1 single-feature splits.
LabeledDataset gen_basis(int k);

// 2d points in d dimensions: for each coordinate j, the all-minus-ones
// vector with coordinate j zeroed (label 0, first d rows), then the
// all-ones vector with coordinate j zeroed (label 1, last d rows). Any
// single threshold pays a constant-factor premium over the best
// 2-clustering, uniformly over features.
LabeledDataset gen_two_cluster_lb(int d);

// k random sign vectors in d = k^3 dimensions; each spawns d points with one
// coordinate zeroed (cluster-major, zeroed coordinate ascending). Redraws
// until verify_codeword_properties passes, then raises PropertyFailure.
CodewordDataset gen_codeword(int k, std::uint64_t seed, int max_retries = 50);

// Checks the pairwise-disagreement floor (d/4) and, for subset sizes
// l = 1..l_max (capped at 2), that every sign pattern on every coordinate
// subset is hit by at least k * (1/2^l - eps) codewords. Thresholds <= 0
// make a level vacuously true. eps < 0 selects the default ln(k)/sqrt(k).
CodewordPropertyReport verify_codeword_properties(const Matrix& codewords, int l_max = 2,
                                                  double eps = -1.0);

// Two blobs of n_per_blob points jittered uniformly in [-spread, spread]^2
// around (-2, 0) and (2, 0) (labels 0 and 1), plus one outlier above each
// blob at height v (label 2). The outlier pair's own cluster cost is
// independent of v, while any split that strands one outlier with a blob
// pays on the order of v^2.
LabeledDataset gen_id3_failure(double v, int n_per_blob = 500, double spread = 0.1,
                               std::uint64_t seed = 0);

// n points round-robin over k blobs: blob centers uniform in
// [0, separation]^d, points jittered uniformly in [-jitter, jitter]^d.
MixtureDataset gen_mixture(int k, int d, int n, double separation, double jitter,
                           std::uint64_t seed);

}  // namespace xkm
