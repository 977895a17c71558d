#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hypzeros/rational.hpp"

namespace hypzeros {

/// Dense univariate polynomial with exact rational coefficients, constant
/// term first. Trailing zero coefficients are stripped on construction, so
/// the zero polynomial is the empty coefficient list and has no degree.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coefficients);
  RatPoly(std::initializer_list<Rational> coefficients)
      : RatPoly(std::vector<Rational>(coefficients)) {}

  static RatPoly constant(const Rational& value);
  static RatPoly monomial(const Rational& coefficient, std::size_t power);
  /// slope * x + intercept
  static RatPoly linear(const Rational& slope, const Rational& intercept);

  bool is_zero() const { return coefficients_.empty(); }
  bool is_constant() const { return coefficients_.size() <= 1; }

  /// Throws ZeroPolynomial for the zero polynomial.
  std::size_t degree() const;

  std::span<const Rational> coefficients() const { return coefficients_; }
  /// Coefficient of x^power; zero past the degree.
  Rational coefficient(std::size_t power) const;

  Rational evaluate(const Rational& x) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rational& s);
  RatPoly operator-() const;

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  /// "3x^2 - x + 1" style rendering, highest power first.
  std::string str(char variable = 'z') const;

 private:
  void normalize();

  std::vector<Rational> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const RatPoly& p);

struct Division {
  RatPoly quotient;
  RatPoly remainder;
};

/// Throws ZeroPolynomial when p is zero.
Rational leading_coefficient(const RatPoly& p);

RatPoly derivative(const RatPoly& p);

/// Euclidean division f = q*g + r with deg r < deg g (or r = 0).
/// Throws DivisorZero when g is zero and DegreeOrder when deg f < deg g.
Division divide(const RatPoly& f, const RatPoly& g);

RatPoly power(const RatPoly& p, unsigned exponent);

/// p(slope * x + intercept).
RatPoly compose_affine(const RatPoly& p, const Rational& slope,
                       const Rational& intercept);

/// Clears the denominator of p(num(x) / den(x)) for linear num, den:
/// returns sum_k p_k num^k den^(order - k). Requires deg p <= order.
RatPoly homogenize(const RatPoly& p, std::size_t order, const RatPoly& num,
                   const RatPoly& den);

}  // namespace hypzeros
