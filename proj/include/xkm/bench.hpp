#pragma once

#include <vector>

#include "xkm/types.hpp"

namespace xkm {

struct BenchRow {
  int n = 0;
  int d = 0;
  int k = 0;
  int rep = 0;
  double seconds = 0.0;
  double cost = 0.0;
};

// Times tree construction alone; data generation and seeding stay outside
// the clock. One row per repetition.
std::vector<BenchRow> run_bench(const std::vector<int>& sizes, int d, int k, int reps,
                                unsigned long long seed, double separation = 10.0);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace xkm
