#pragma once

#include <cstdint>
#include <random>

namespace xkm {

// All randomness in the library flows through this wrapper around
// std::mt19937_64, whose output sequence is pinned by the language standard,
// so identical seeds give identical results on every platform. The value
// mappings are fixed here and nowhere else:
//   u01():        (u64() >> 11) * 2^-53, uniform in [0,1)
//   uniform(a,b): a + (b-a) * u01()
//   index(n):     high 64 bits of u64() * n (Lemire reduction)
//   pm_one():     top bit of u64() mapped to -1/+1
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t u64() { return engine_(); }

  double u01() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * u01(); }

  long index(long n) {
    return static_cast<long>((static_cast<unsigned __int128>(u64()) *
                              static_cast<unsigned __int128>(n)) >>
                             64);
  }

  int pm_one() { return (u64() >> 63) ? 1 : -1; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace xkm
