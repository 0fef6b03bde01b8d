#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace makai {

// Deterministic RNG. std::mt19937_64 output is pinned by the standard, but
// the std::*_distribution wrappers are not, so we do the bit -> double
// conversion ourselves.  Same seed => same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // uniform in [0, 1) with 53 random bits
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int uniform_int(int lo, int hi) {  // inclusive ends, small ranges only
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(eng_() % span);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace makai
