#include "xkm/runtime.hpp"

#include <atomic>
#include <cstdlib>

namespace xkm {

static int initial_threads() {
  if (const char* env = std::getenv("XKM_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

static std::atomic<int>& thread_cap() {
  static std::atomic<int> cap{initial_threads()};
  return cap;
}

int max_threads() { return thread_cap().load(std::memory_order_relaxed); }

void set_max_threads(int n) { thread_cap().store(n < 1 ? 1 : n, std::memory_order_relaxed); }

}  // namespace xkm
