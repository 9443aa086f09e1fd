#include "xkm/bench.hpp"

#include <chrono>
#include <sstream>

#include "xkm/cost.hpp"
#include "xkm/datasets.hpp"
#include "xkm/imm.hpp"
#include "xkm/reference.hpp"

namespace xkm {

std::vector<BenchRow> run_bench(const std::vector<int>& sizes, int d, int k, int reps,
                                unsigned long long seed, double separation) {
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    for (int rep = 0; rep < reps; ++rep) {
      unsigned long long run_seed = seed + 1000003ull * static_cast<unsigned long long>(rep);
      auto data = gen_mixture(k, d, n, separation, 0.5, run_seed);
      auto centers = kmeanspp_seed(data.x, k, Objective::means, run_seed);

      auto start = std::chrono::steady_clock::now();
      auto tree = imm_fit(data.x, centers);
      auto stop = std::chrono::steady_clock::now();

      BenchRow row;
      row.n = n;
      row.d = d;
      row.k = k;
      row.rep = rep;
      row.seconds = std::chrono::duration<double>(stop - start).count();
      row.cost = cost_of_tree(data.x, tree).total_cost;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,d,k,rep,seconds,cost\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.d << ',' << row.k << ',' << row.rep << ','
        << format_double(row.seconds) << ',' << format_double(row.cost) << '\n';
  }
  return out.str();
}

}  // namespace xkm
