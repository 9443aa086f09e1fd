#include "xkm/datasets.hpp"

#include <cmath>

#include "xkm/rng.hpp"

namespace xkm {

LabeledDataset gen_basis(int k) {
  if (k < 2) throw err::k_too_large(k, 1);
  LabeledDataset out;
  out.x = Matrix(k, k - 1);
  for (int j = 0; j < k - 1; ++j) out.x.at(j, j) = 1.0;
  out.labels.resize(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) out.labels[j] = j;
  return out;
}

LabeledDataset gen_two_cluster_lb(int d) {
  if (d < 2) throw err::too_large("need d >= 2");
  LabeledDataset out;
  out.x = Matrix(2 * d, d);
  out.labels.assign(static_cast<size_t>(2 * d), 0);
  for (int j = 0; j < d; ++j) {
    for (int c = 0; c < d; ++c) {
      out.x.at(j, c) = c == j ? 0.0 : -1.0;
      out.x.at(d + j, c) = c == j ? 0.0 : 1.0;
    }
    out.labels[d + j] = 1;
  }
  return out;
}

CodewordDataset gen_codeword(int k, std::uint64_t seed, int max_retries) {
  if (k < 3) throw err::k_too_large(k, 2);
  if (k > 10) throw err::too_large("codeword family: k > 10 means k^4 points");
  const int d = k * k * k;
  Rng rng(seed);

  for (int attempt = 1; attempt <= max_retries; ++attempt) {
    Matrix codewords(k, d);
    for (int j = 0; j < k; ++j)
      for (int c = 0; c < d; ++c) codewords.at(j, c) = static_cast<double>(rng.pm_one());
    auto report = verify_codeword_properties(codewords);
    if (!report.ok()) continue;

    CodewordDataset out;
    out.codewords = std::move(codewords);
    out.attempts = attempt;
    out.x = Matrix(d * k, d);
    out.labels.assign(static_cast<size_t>(d) * k, 0);
    int row = 0;
    for (int j = 0; j < k; ++j) {
      for (int zero = 0; zero < d; ++zero, ++row) {
        for (int c = 0; c < d; ++c) out.x.at(row, c) = c == zero ? 0.0 : out.codewords.at(j, c);
        out.labels[row] = j;
      }
    }
    return out;
  }
  throw err::property_failure("codeword draw after " + std::to_string(max_retries) + " tries");
}

CodewordPropertyReport verify_codeword_properties(const Matrix& codewords, int l_max,
                                                  double eps) {
  const int k = codewords.rows;
  const int d = codewords.cols;
  if (k < 2 || d < 1) throw err::empty("codeword matrix");
  if (eps < 0.0) eps = std::log(static_cast<double>(k)) / std::sqrt(static_cast<double>(k));

  CodewordPropertyReport report;
  report.required_disagreement = static_cast<double>(d) / 4.0;
  report.min_pair_disagreement = d;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      long disagree = 0;
      for (int c = 0; c < d; ++c)
        if (codewords.at(a, c) != codewords.at(b, c)) ++disagree;
      report.min_pair_disagreement = std::min(report.min_pair_disagreement, disagree);
    }
  report.distance_ok =
      static_cast<double>(report.min_pair_disagreement) >= report.required_disagreement;

  report.balance_ok = true;
  report.balance_vacuous = true;
  report.l_checked = std::min(l_max, 2);

  if (report.l_checked >= 1) {
    double need = k * (0.5 - eps);
    if (need > 0.0) {
      report.balance_vacuous = false;
      for (int c = 0; c < d && report.balance_ok; ++c) {
        long plus = 0;
        for (int j = 0; j < k; ++j)
          if (codewords.at(j, c) > 0) ++plus;
        if (static_cast<double>(plus) < need || static_cast<double>(k - plus) < need)
          report.balance_ok = false;
      }
    }
  }
  if (report.l_checked >= 2 && report.balance_ok) {
    double need = k * (0.25 - eps);
    if (need > 0.0) {
      report.balance_vacuous = false;
      // Full enumeration up to a fixed budget of coordinate pairs, then a
      // deterministic sample.
      const long budget = 200000;
      long n_pairs = static_cast<long>(d) * (d - 1) / 2;
      Rng pair_rng(0xC0DEBA5E);
      long trials = std::min(n_pairs, budget);
      for (long t = 0; t < trials && report.balance_ok; ++t) {
        int c1, c2;
        if (n_pairs <= budget) {
          // walk pairs in lexicographic order
          long idx = t;
          c1 = 0;
          long row_len = d - 1;
          while (idx >= row_len) {
            idx -= row_len;
            ++c1;
            --row_len;
          }
          c2 = c1 + 1 + static_cast<int>(idx);
        } else {
          c1 = static_cast<int>(pair_rng.index(d));
          c2 = static_cast<int>(pair_rng.index(d - 1));
          if (c2 >= c1) ++c2;
        }
        long counts[4] = {0, 0, 0, 0};
        for (int j = 0; j < k; ++j) {
          int pattern = (codewords.at(j, c1) > 0 ? 2 : 0) + (codewords.at(j, c2) > 0 ? 1 : 0);
          ++counts[pattern];
        }
        for (long cnt : counts)
          if (static_cast<double>(cnt) < need) report.balance_ok = false;
      }
    }
  }
  return report;
}

LabeledDataset gen_id3_failure(double v, int n_per_blob, double spread, std::uint64_t seed) {
  if (n_per_blob < 1) throw err::empty("blob size");
  if (!(v > 0.0)) throw err::non_finite(-1, -1);
  Rng rng(seed);
  LabeledDataset out;
  out.x = Matrix(2 * n_per_blob + 2, 2);
  out.labels.assign(static_cast<size_t>(2 * n_per_blob + 2), 0);
  int row = 0;
  for (int blob = 0; blob < 2; ++blob) {
    double cx = blob == 0 ? -2.0 : 2.0;
    for (int p = 0; p < n_per_blob; ++p, ++row) {
      out.x.at(row, 0) = cx + rng.uniform(-spread, spread);
      out.x.at(row, 1) = rng.uniform(-spread, spread);
      out.labels[row] = blob;
    }
  }
  out.x.at(row, 0) = -2.0;
  out.x.at(row, 1) = v;
  out.labels[row++] = 2;
  out.x.at(row, 0) = 2.0;
  out.x.at(row, 1) = v;
  out.labels[row] = 2;
  return out;
}

MixtureDataset gen_mixture(int k, int d, int n, double separation, double jitter,
                           std::uint64_t seed) {
  if (k < 1 || d < 1 || n < k) throw err::k_too_large(k, n);
  Rng rng(seed);
  MixtureDataset out;
  out.blob_centers = Matrix(k, d);
  for (int j = 0; j < k; ++j)
    for (int c = 0; c < d; ++c) out.blob_centers.at(j, c) = separation * rng.u01();
  out.x = Matrix(n, d);
  out.labels.assign(static_cast<size_t>(n), 0);
  for (int p = 0; p < n; ++p) {
    int blob = p % k;
    out.labels[p] = blob;
    for (int c = 0; c < d; ++c)
      out.x.at(p, c) = out.blob_centers.at(blob, c) + rng.uniform(-jitter, jitter);
  }
  return out;
}

}  // namespace xkm
