#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "common/error.hpp"

namespace lexlab {

// Finalizer of splitmix64; used to derive independent sub-streams from a
// (seed, index) pair so per-exemplar generation does not depend on how much
// randomness earlier exemplars consumed.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t substream_seed(uint64_t seed, uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 1));
}

// Seeded random stream. mt19937_64 output is pinned by the standard; the
// bounded samplers below are ours, because std::uniform_int_distribution is
// implementation-defined and would break cross-toolchain reproducibility.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, n).
  uint64_t below(uint64_t n) {
    if (n == 0) fail(ErrorCode::kInvalidArgument, "Rng::below(0)");
    if (n == 1) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lexlab
