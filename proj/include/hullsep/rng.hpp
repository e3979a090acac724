#pragma once

#include <cstdint>
#include <random>

namespace hullsep {

// mt19937_64's output sequence is fully specified by the standard; the
// helpers below avoid std::uniform_*_distribution, whose mapping is
// implementation-defined, so seeded runs are reproducible everywhere.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Uniform value in [0, n). Requires n >= 1.
inline std::uint64_t rng_below(Rng& g, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  std::uint64_t v = g();
  while (v < threshold) v = g();  // leftover range length is a multiple of n
  return v % n;
}

// Uniform integer in [lo, hi]. Requires lo <= hi.
inline std::int64_t rng_int(Rng& g, std::int64_t lo, std::int64_t hi) {
  std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                   rng_below(g, span));
}

// Uniform double in [0, 1) with 53 random bits.
inline double rng_unit(Rng& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline bool rng_chance(Rng& g, double p) { return rng_unit(g) < p; }

}  // namespace hullsep
