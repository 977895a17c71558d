#pragma once

#include <random>

#include "hypzeros/hyp2f1.hpp"
#include "hypzeros/rational.hpp"
#include "hypzeros/ratpoly.hpp"

namespace hypzeros::testing {

inline Rational Q(const char* text) { return Rational::parse(text); }

// Small rationals p/q with |p| <= span*q and q in 1..max_den.
inline Rational random_rational(std::mt19937_64& rng, long span = 12,
                                long max_den = 8) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long q = den(rng);
  std::uniform_int_distribution<long> num(-span * q, span * q);
  return Rational(num(rng), q);
}

inline RatPoly random_poly(std::mt19937_64& rng, std::size_t degree) {
  std::vector<Rational> coefs;
  for (std::size_t i = 0; i <= degree; ++i) coefs.push_back(random_rational(rng));
  if (coefs.back().is_zero()) coefs.back() = Rational(1);
  return RatPoly(std::move(coefs));
}

inline HypParams random_params(std::mt19937_64& rng, unsigned max_n) {
  std::uniform_int_distribution<unsigned> deg(2, max_n);
  for (;;) {
    const unsigned n = deg(rng);
    const Rational b = random_rational(rng);
    const Rational c = random_rational(rng);
    if (HypParams::violation(n, b, c).empty()) return HypParams::make(n, b, c);
  }
}

}  // namespace hypzeros::testing
