#include <doctest.h>

#include <algorithm>
#include <vector>

#include "xkm/median_set.hpp"
#include "xkm/rng.hpp"

using namespace xkm;

namespace {

// The slow answer: sort what is left and read off the middle two.
std::pair<double, double> brute_interval(const DataMatrix& x, const std::vector<char>& alive,
                                         int coord) {
  std::vector<double> vals;
  for (int p = 0; p < x.rows; ++p)
    if (alive[p]) vals.push_back(x.at(p, coord));
  std::sort(vals.begin(), vals.end());
  size_t m = vals.size();
  if (m % 2 == 1) return {vals[m / 2], vals[m / 2]};
  return {vals[m / 2 - 1], vals[m / 2]};
}

}  // namespace

TEST_CASE("median intervals survive arbitrary deletion orders") {
  Rng rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng.index(39));
    int d = 1 + static_cast<int>(rng.index(4));
    DataMatrix x(n, d);
    for (auto& v : x.values) v = static_cast<double>(rng.index(7));  // many ties

    auto orders = argsort_features(x);
    ShrinkingMedianSet set(x, orders);
    std::vector<char> alive(static_cast<size_t>(n), 1);

    std::vector<int> kill(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) kill[p] = p;
    for (int p = n - 1; p > 0; --p) std::swap(kill[p], kill[rng.index(static_cast<uint64_t>(p) + 1)]);

    for (int step = 0; step < n - 1; ++step) {
      set.erase(kill[step]);
      alive[kill[step]] = 0;
      int probe = 1 + static_cast<int>(rng.index(3));
      for (int rep = 0; rep < probe; ++rep) {
        int i = static_cast<int>(rng.index(static_cast<uint64_t>(d)));
        auto want = brute_interval(x, alive, i);
        auto got = set.median_interval(i);
        REQUIRE(got.first == want.first);
        REQUIRE(got.second == want.second);

        double v = static_cast<double>(rng.index(9)) - 1.0;
        double want_gap = std::max({want.first - v, v - want.second, 0.0});
        REQUIRE(set.gap(i, v) == want_gap);
      }
    }
    CHECK(set.size() == 1);
  }
}

TEST_CASE("reset restores the full set") {
  DataMatrix x(4, 1);
  x.at(0, 0) = 0.0;
  x.at(1, 0) = 10.0;
  x.at(2, 0) = 20.0;
  x.at(3, 0) = 30.0;
  auto orders = argsort_features(x);
  ShrinkingMedianSet set(x, orders);

  set.erase(1);
  set.erase(3);
  CHECK(set.median_interval(0) == std::pair<double, double>{0.0, 20.0});

  set.reset();
  CHECK(set.size() == 4);
  CHECK(set.median_interval(0) == std::pair<double, double>{10.0, 20.0});
  CHECK(set.median(0) == 15.0);
  CHECK(set.gap(0, 12.0) == 0.0);
  CHECK(set.gap(0, 35.0) == 15.0);
}

TEST_CASE("erasing down to one point tracks that point") {
  DataMatrix x(3, 2);
  x.at(0, 0) = 5.0;
  x.at(0, 1) = -1.0;
  x.at(1, 0) = 7.0;
  x.at(1, 1) = -2.0;
  x.at(2, 0) = 6.0;
  x.at(2, 1) = -3.0;
  auto orders = argsort_features(x);
  ShrinkingMedianSet set(x, orders);

  set.erase(0);
  set.erase(2);
  CHECK(set.median_interval(0) == std::pair<double, double>{7.0, 7.0});
  CHECK(set.median_interval(1) == std::pair<double, double>{-2.0, -2.0});
}
