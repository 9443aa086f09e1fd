#pragma once

#include <thread>
#include <vector>

namespace xkm {

// Upper bound on worker threads used by the per-feature scans.
// Defaults to 1 (or the XKM_THREADS environment variable when set);
// results are identical for any value because every feature writes to its
// own slot and reductions run in feature order.
int max_threads();
void set_max_threads(int n);

// Runs fn(i) for i in [0,n). With max_threads() > 1 the range is split into
// contiguous chunks, one thread each; fn must only touch state owned by i.
template <typename F>
void for_each_index(int n, F&& fn) {
  int threads = max_threads();
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  threads = std::min(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    int lo = t * chunk;
    int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace xkm
