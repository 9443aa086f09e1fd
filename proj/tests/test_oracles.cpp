#include <doctest.h>

#include "xkm/cost.hpp"
#include "xkm/datasets.hpp"
#include "xkm/oracles.hpp"
#include "xkm/reference.hpp"
#include "xkm/rng.hpp"

using namespace xkm;

namespace {

DataMatrix mat(std::vector<std::vector<double>> rows) { return validate_dataset(rows); }

}  // namespace

TEST_CASE("naive_best_cut on hand-checkable instances") {
  auto simple = oracle::naive_best_cut(mat({{0.0}, {2.0}}), Objective::means);
  CHECK(simple.cost == 0.0);
  CHECK(simple.threshold == 0.0);

  auto data = gen_two_cluster_lb(3);
  auto med = oracle::naive_best_cut(data.x, Objective::medians);
  CHECK(med.cost == doctest::Approx(10.0));
  CHECK(med.feature == 0);
  CHECK(med.threshold == -1.0);
  auto mea = oracle::naive_best_cut(data.x, Objective::means);
  CHECK(mea.cost == doctest::Approx(7.5));
}

TEST_CASE("brute_opt_partition finds the obvious grouping") {
  auto x = mat({{0.0}, {1.0}, {50.0}, {51.0}});
  auto result = oracle::brute_opt_partition(x, 2, Objective::means);
  CHECK(result.cost == doctest::Approx(1.0));
  CHECK(result.labels[0] == result.labels[1]);
  CHECK(result.labels[2] == result.labels[3]);
  CHECK(result.labels[0] != result.labels[2]);

  // k = n: every point its own cluster, zero cost.
  auto singletons = oracle::brute_opt_partition(x, 4, Objective::medians);
  CHECK(singletons.cost == 0.0);

  // Fewer blocks can win: allowing up to 3 blocks keeps the 2-block answer.
  auto upto3 = oracle::brute_opt_partition(x, 3, Objective::means);
  CHECK(upto3.cost <= result.cost + 1e-12);
}

TEST_CASE("brute_opt_partition enumeration guard") {
  DataMatrix x(26, 1);
  for (int p = 0; p < 26; ++p) x.at(p, 0) = p;
  try {
    oracle::brute_opt_partition(x, 3, Objective::means);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::TooLarge);
  }
}

TEST_CASE("brute_best_tree: chains beat single cuts on the basis dataset") {
  auto data = gen_basis(3);

  auto three = oracle::brute_best_tree(data.x, 3, Objective::medians);
  CHECK(three.cost == 0.0);
  three.tree.validate_clustering_tree();
  CHECK(three.tree.depth() == 2);

  auto two = oracle::brute_best_tree(data.x, 2, Objective::medians);
  CHECK(two.cost > 0.0);

  auto one = oracle::brute_best_tree(data.x, 1, Objective::medians);
  CHECK(one.cost == doctest::Approx(cost_of_partition(data.x, {0, 0, 0}, Objective::medians).total_cost));
}

TEST_CASE("brute_best_tree with two leaves equals the best cut") {
  Rng rng(808);
  for (int trial = 0; trial < 8; ++trial) {
    DataMatrix x(6, 2);
    for (auto& v : x.values) v = static_cast<double>(rng.index(5));
    for (auto objective : {Objective::means, Objective::medians}) {
      CutResult cut;
      try {
        cut = oracle::naive_best_cut(x, objective);
      } catch (const Error&) {
        continue;
      }
      auto tree = oracle::brute_best_tree(x, 2, objective);
      CHECK(cost_close(tree.cost, cut.cost));
      CHECK(cost_close(cost_of_tree(x, tree.tree).total_cost, tree.cost));
    }
  }
}

TEST_CASE("brute_best_tree guards its exponential search") {
  DataMatrix wide(4, 4);
  CHECK_THROWS_AS(oracle::brute_best_tree(wide, 2, Objective::means), Error);
  DataMatrix tall(11, 2);
  CHECK_THROWS_AS(oracle::brute_best_tree(tall, 2, Objective::means), Error);
}

TEST_CASE("matching check holds on structured and clustered instances") {
  for (int d = 2; d <= 5; ++d) {
    auto data = gen_two_cluster_lb(d);
    for (int i = 0; i < d; ++i) {
      CHECK(oracle::verify_matching_lemma(data.x, data.labels, i, Objective::medians));
      CHECK(oracle::verify_matching_lemma(data.x, data.labels, i, Objective::means));
    }
  }

  Rng rng(616);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + static_cast<int>(rng.index(7));
    DataMatrix x(n, 2);
    for (auto& v : x.values) v = rng.uniform(0.0, 4.0);
    for (auto objective : {Objective::means, Objective::medians}) {
      auto opt = oracle::brute_opt_partition(x, 2, objective);
      bool two_clusters = false;
      for (int p = 1; p < n; ++p)
        if (opt.labels[p] != opt.labels[0]) two_clusters = true;
      if (!two_clusters) continue;
      for (int i = 0; i < x.cols; ++i) CHECK(oracle::verify_matching_lemma(x, opt.labels, i, objective));
    }
  }
}

TEST_CASE("matching check guard") {
  DataMatrix x(41, 1);
  for (int p = 0; p < 41; ++p) x.at(p, 0) = p;
  Labeling labels(41, 0);
  labels[40] = 1;
  CHECK_THROWS_AS(oracle::verify_matching_lemma(x, labels, 0, Objective::means), Error);
}
