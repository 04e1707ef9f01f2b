#pragma once

#include <cstdint>
#include <random>

namespace hedonic {

// All randomized generators draw through these helpers so that a seed fixes
// the output bit for bit on every platform. mt19937_64 itself is pinned by
// the standard; the std distributions are not, so the mappings live here.
using Rng = std::mt19937_64;

inline double next_unit(Rng& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

inline bool next_chance(Rng& rng, double p) {
  return next_unit(rng) < p;
}

// Uniform over [0, bound) by rejection, bound >= 1.
inline std::uint64_t next_below(Rng& rng, std::uint64_t bound) {
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

inline int next_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(next_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace hedonic
