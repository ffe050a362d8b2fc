#pragma once

#include <cstdint>
#include <random>

#include "irs_si/linalg.hpp"

namespace irs_si {

using Rng = std::mt19937_64;

/// Independent stream for task `index` of a run seeded with `seed`. The
/// mapping is fixed so that results do not depend on scheduling.
inline Rng substream(std::uint64_t seed, std::uint64_t index, std::uint32_t salt = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    salt};
  return Rng(seq);
}

/// One CN(0, 1) sample: real and imaginary parts each N(0, 1/2).
inline Complex complex_normal(Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

inline CVector complex_normal_vector(Rng& rng, Eigen::Index n) {
  CVector out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(i) = complex_normal(rng);
  return out;
}

}  // namespace irs_si
