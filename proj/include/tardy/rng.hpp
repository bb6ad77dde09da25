#pragma once

#include <cstdint>

namespace tardy {

// SplitMix64. Fixed algorithm with pure uint64 semantics so that
// generated corpora are reproducible across platforms and languages.
// Seeding recipe: the state is exactly the user-supplied seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, bound). bound must be nonzero. The modulo
  // bias is irrelevant at the bounds used here and keeps the semantics
  // trivially portable.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Value in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace tardy
