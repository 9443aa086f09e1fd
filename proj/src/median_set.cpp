#include "xkm/median_set.hpp"

namespace xkm {

ShrinkingMedianSet::ShrinkingMedianSet(const DataMatrix& x,
                                       const std::vector<std::vector<int>>& orders)
    : n_(x.rows), d_(x.cols) {
  value_.resize(static_cast<size_t>(d_));
  rank_of_.resize(static_cast<size_t>(d_));
  prev_.resize(static_cast<size_t>(d_));
  next_.resize(static_cast<size_t>(d_));
  mid_.assign(static_cast<size_t>(d_), -1);
  for (int i = 0; i < d_; ++i) {
    value_[i].resize(static_cast<size_t>(n_));
    rank_of_[i].resize(static_cast<size_t>(n_));
    prev_[i].resize(static_cast<size_t>(n_));
    next_[i].resize(static_cast<size_t>(n_));
    for (int r = 0; r < n_; ++r) {
      int p = orders[i][r];
      value_[i][r] = x.at(p, i);
      rank_of_[i][p] = r;
    }
  }
  reset();
}

void ShrinkingMedianSet::reset() {
  size_ = n_;
  for (int i = 0; i < d_; ++i) {
    for (int r = 0; r < n_; ++r) {
      prev_[i][r] = r - 1;
      next_[i][r] = r + 1 < n_ ? r + 1 : -1;
    }
    mid_[i] = (n_ - 1) / 2;
  }
}

void ShrinkingMedianSet::erase(int point) {
  const int m = size_;
  for (int i = 0; i < d_; ++i) {
    const int r = rank_of_[i][point];
    const int mid = mid_[i];
    int new_mid;
    if (m == 1) {
      new_mid = -1;
    } else if (m % 2 == 0) {
      // Even size: erasing at or before the lower middle shifts it up one.
      new_mid = (r <= mid) ? next_[i][mid] : mid;
    } else {
      // Odd size: erasing at or after the middle shifts it down one.
      new_mid = (r >= mid) ? prev_[i][mid] : mid;
    }
    // The reads above happen before the unlink on purpose; unlinking r
    // cannot change next_[mid] when r <= mid, nor prev_[mid] when r >= mid.
    int pr = prev_[i][r], nx = next_[i][r];
    if (pr >= 0) next_[i][pr] = nx;
    if (nx >= 0) prev_[i][nx] = pr;
    mid_[i] = new_mid;
  }
  --size_;
}

std::pair<double, double> ShrinkingMedianSet::median_interval(int i) const {
  if (size_ == 0) throw err::empty_index_set("median of empty set");
  int mid = mid_[i];
  double lo = value_[i][mid];
  if (size_ % 2 == 1) return {lo, lo};
  return {lo, value_[i][next_[i][mid]]};
}

}  // namespace xkm
