#ifndef CURVELIM_RANDOM_HPP
#define CURVELIM_RANDOM_HPP

#include <cstdint>
#include <random>

#include "curvelim/scalar.hpp"

namespace curvelim {

/// Seeded generator used by every fixture and sampling routine; a seed fully
/// determines the output.
using Rng = std::mt19937_64;

inline long random_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Uniform numerator in [lo·den, hi·den] over a denominator in [1, max_den].
inline Rational random_rational(Rng& rng, long lo, long hi, long max_den = 1) {
  const long den = max_den > 1 ? random_int(rng, 1, max_den) : 1;
  Rational q(random_int(rng, lo * den, hi * den), den);
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(Rng& rng, long lo, long hi, long max_den = 1) {
  for (;;) {
    Rational q = random_rational(rng, lo, hi, max_den);
    if (sgn(q) != 0) return q;
  }
}

}  // namespace curvelim

#endif
