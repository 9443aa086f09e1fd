#include <doctest.h>

#include <cmath>
#include <set>

#include "xkm/cost.hpp"
#include "xkm/datasets.hpp"

using namespace xkm;

TEST_CASE("basis dataset: unit vectors plus the origin") {
  auto data = gen_basis(5);
  REQUIRE(data.x.rows == 5);
  REQUIRE(data.x.cols == 4);
  for (int p = 0; p < 4; ++p)
    for (int c = 0; c < 4; ++c) CHECK(data.x.at(p, c) == (p == c ? 1.0 : 0.0));
  for (int c = 0; c < 4; ++c) CHECK(data.x.at(4, c) == 0.0);
  for (int p = 0; p < 5; ++p) CHECK(data.labels[p] == p);

  CHECK_THROWS_AS(gen_basis(1), Error);
}

TEST_CASE("hamming-ball pair dataset: one zero per row, d rows per sign") {
  for (int d : {2, 5}) {
    auto data = gen_two_cluster_lb(d);
    REQUIRE(data.x.rows == 2 * d);
    REQUIRE(data.x.cols == d);

    for (int p = 0; p < 2 * d; ++p) {
      int zeros = 0;
      double sign = p < d ? -1.0 : 1.0;
      for (int c = 0; c < d; ++c) {
        double v = data.x.at(p, c);
        if (v == 0.0)
          ++zeros;
        else
          CHECK(v == sign);
      }
      CHECK(zeros == 1);
      CHECK(data.labels[p] == (p < d ? 0 : 1));
    }
  }
}

TEST_CASE("codeword dataset: shape, labels, and sign structure") {
  auto data = gen_codeword(3, 1);
  int d = 27;
  REQUIRE(data.x.cols == d);
  REQUIRE(data.x.rows == 3 * d);
  REQUIRE(data.codewords.rows == 3);
  REQUIRE(data.codewords.cols == d);

  for (int p = 0; p < data.x.rows; ++p) {
    int cluster = p / d;
    int zeroed = p % d;
    CHECK(data.labels[p] == cluster);
    for (int c = 0; c < d; ++c) {
      double want = c == zeroed ? 0.0 : data.codewords.at(cluster, c);
      CHECK(data.x.at(p, c) == want);
    }
  }

  // Same seed, same draw; the verifier approves what the generator shipped.
  auto again = gen_codeword(3, 1);
  CHECK(again.x == data.x);
  CHECK(verify_codeword_properties(data.codewords).ok());

  CHECK_THROWS_AS(gen_codeword(2, 0), Error);
  CHECK_THROWS_AS(gen_codeword(11, 0), Error);
}

TEST_CASE("codeword verifier: pairwise disagreement floor") {
  // Hand-built codewords for k=3, d=27: two that agree everywhere fail.
  Matrix bad(3, 27);
  for (int c = 0; c < 27; ++c) {
    bad.at(0, c) = 1.0;
    bad.at(1, c) = 1.0;  // identical to row 0
    bad.at(2, c) = c % 2 == 0 ? 1.0 : -1.0;
  }
  auto report = verify_codeword_properties(bad);
  CHECK(!report.distance_ok);
  CHECK(report.min_pair_disagreement == 0);
  CHECK(!report.ok());
}

TEST_CASE("codeword clusters cost dk around medians and k(d-1) around means") {
  for (int k : {3, 4}) {
    auto data = gen_codeword(k, 7);
    int d = k * k * k;
    auto med = cost_of_partition(data.x, data.labels, Objective::medians);
    CHECK(med.total_cost == doctest::Approx(static_cast<double>(d) * k));
    auto mea = cost_of_partition(data.x, data.labels, Objective::means);
    CHECK(mea.total_cost == doctest::Approx(static_cast<double>(k) * (d - 1)));
  }
}

TEST_CASE("outlier dataset: two blobs plus a displaced pair") {
  auto data = gen_id3_failure(123.0, 10, 0.25, 4);
  REQUIRE(data.x.rows == 22);
  REQUIRE(data.x.cols == 2);

  int counts[3] = {0, 0, 0};
  for (int p = 0; p < data.x.rows; ++p) ++counts[data.labels[p]];
  CHECK(counts[0] == 10);
  CHECK(counts[1] == 10);
  CHECK(counts[2] == 2);

  for (int p = 0; p < 20; ++p) {
    double cx = data.labels[p] == 0 ? -2.0 : 2.0;
    CHECK(std::abs(data.x.at(p, 0) - cx) <= 0.25);
    CHECK(std::abs(data.x.at(p, 1)) <= 0.25);
  }
  CHECK(data.x.at(20, 0) == -2.0);
  CHECK(data.x.at(20, 1) == 123.0);
  CHECK(data.x.at(21, 0) == 2.0);
  CHECK(data.x.at(21, 1) == 123.0);
}

TEST_CASE("mixture dataset: round-robin blobs inside their jitter boxes") {
  auto data = gen_mixture(4, 3, 41, 50.0, 1.5, 12);
  REQUIRE(data.x.rows == 41);
  REQUIRE(data.x.cols == 3);
  REQUIRE(data.blob_centers.rows == 4);

  for (int p = 0; p < data.x.rows; ++p) {
    CHECK(data.labels[p] == p % 4);
    for (int c = 0; c < 3; ++c) {
      double center = data.blob_centers.at(data.labels[p], c);
      CHECK(std::abs(data.x.at(p, c) - center) <= 1.5);
      CHECK(center >= 0.0);
      CHECK(center <= 50.0);
    }
  }

  auto again = gen_mixture(4, 3, 41, 50.0, 1.5, 12);
  CHECK(again.x == data.x);
  auto other = gen_mixture(4, 3, 41, 50.0, 1.5, 13);
  CHECK(other.x != data.x);
}
