#pragma once

#include <cstdint>
#include <random>

#include "homdom/gaussian.hpp"

namespace homdom {

using Rng = std::mt19937_64;

/// Rational with denominator in [1, max_den] and value in [lo, hi].
inline Rational random_rational(Rng& rng, long lo, long hi, long max_den = 8) {
  std::uniform_int_distribution<long> den_dist(1, max_den);
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(lo * den, hi * den);
  return Rational(num_dist(rng), den);
}

/// Strictly positive rational in (0, hi].
inline Rational random_positive_rational(Rng& rng, long hi, long max_den = 8) {
  std::uniform_int_distribution<long> den_dist(1, max_den);
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(1, hi * den);
  return Rational(num_dist(rng), den);
}

/// Nonzero rational in [lo, hi].
inline Rational random_nonzero_rational(Rng& rng, long lo, long hi, long max_den = 8) {
  for (;;) {
    Rational r = random_rational(rng, lo, hi, max_den);
    if (!r.is_zero()) return r;
  }
}

inline GaussianRational random_gaussian(Rng& rng, long lo, long hi, long max_den = 8) {
  Rational re = random_rational(rng, lo, hi, max_den);
  Rational im = random_rational(rng, lo, hi, max_den);
  return {re, im};
}

inline double random_double(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace homdom
