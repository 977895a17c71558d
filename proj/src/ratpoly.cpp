#include "hypzeros/ratpoly.hpp"

#include <ostream>
#include <sstream>

#include "hypzeros/error.hpp"

namespace hypzeros {

RatPoly::RatPoly(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

RatPoly RatPoly::constant(const Rational& value) { return RatPoly({value}); }

RatPoly RatPoly::monomial(const Rational& coefficient, std::size_t power) {
  std::vector<Rational> c(power + 1);
  c[power] = coefficient;
  return RatPoly(std::move(c));
}

RatPoly RatPoly::linear(const Rational& slope, const Rational& intercept) {
  return RatPoly({intercept, slope});
}

void RatPoly::normalize() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) {
    coefficients_.pop_back();
  }
}

std::size_t RatPoly::degree() const {
  if (is_zero()) {
    throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no degree");
  }
  return coefficients_.size() - 1;
}

Rational RatPoly::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : Rational();
}

Rational RatPoly::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(o.coefficients_.size());
  }
  for (std::size_t i = 0; i < o.coefficients_.size(); ++i) {
    coefficients_[i] += o.coefficients_[i];
  }
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(o.coefficients_.size());
  }
  for (std::size_t i = 0; i < o.coefficients_.size(); ++i) {
    coefficients_[i] -= o.coefficients_[i];
  }
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s) {
  for (auto& c : coefficients_) c *= s;
  normalize();
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly out = *this;
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> c(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return RatPoly(std::move(c));
}

std::string RatPoly::str(char variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const Rational& c = coefficients_[i];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) {
      if (mag.is_integer() || i == 0) {
        os << mag;
      } else {
        os << '(' << mag << ')';
      }
    }
    if (i >= 1) os << variable;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) {
  return os << p.str();
}

Rational leading_coefficient(const RatPoly& p) {
  if (p.is_zero()) {
    throw Error(ErrorKind::ZeroPolynomial,
                "leading coefficient of the zero polynomial");
  }
  return p.coefficients().back();
}

RatPoly derivative(const RatPoly& p) {
  const auto c = p.coefficients();
  if (c.size() <= 1) return RatPoly();
  std::vector<Rational> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    d[i - 1] = c[i] * Rational(static_cast<long>(i));
  }
  return RatPoly(std::move(d));
}

Division divide(const RatPoly& f, const RatPoly& g) {
  if (g.is_zero()) {
    throw Error(ErrorKind::DivisorZero, "division by the zero polynomial");
  }
  if (f.is_zero() || f.degree() < g.degree()) {
    throw Error(ErrorKind::DegreeOrder,
                "dividend degree is below divisor degree");
  }
  const std::size_t dg = g.degree();
  const auto gc = g.coefficients();
  const Rational lead = gc.back();
  std::vector<Rational> rem(f.coefficients().begin(), f.coefficients().end());
  std::vector<Rational> quo(rem.size() - dg);
  for (std::size_t shift = quo.size(); shift-- > 0;) {
    const Rational t = rem[shift + dg] / lead;
    quo[shift] = t;
    if (t.is_zero()) continue;
    for (std::size_t i = 0; i <= dg; ++i) {
      rem[shift + i] -= t * gc[i];
    }
  }
  rem.resize(dg);
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly power(const RatPoly& p, unsigned exponent) {
  RatPoly result = RatPoly::constant(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) result = result * p;
  return result;
}

RatPoly compose_affine(const RatPoly& p, const Rational& slope,
                       const Rational& intercept) {
  // Horner in polynomial arithmetic.
  const RatPoly x = RatPoly::linear(slope, intercept);
  RatPoly acc;
  const auto c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * x + RatPoly::constant(c[i]);
  }
  return acc;
}

RatPoly homogenize(const RatPoly& p, std::size_t order, const RatPoly& num,
                   const RatPoly& den) {
  if (!p.is_zero() && p.degree() > order) {
    throw Error(ErrorKind::DegreeOrder, "homogenizing order below degree");
  }
  RatPoly acc;
  for (std::size_t k = 0; k <= order; ++k) {
    const Rational ck = p.coefficient(k);
    if (ck.is_zero()) continue;
    acc += power(num, static_cast<unsigned>(k)) *
           power(den, static_cast<unsigned>(order - k)) * ck;
  }
  return acc;
}

}  // namespace hypzeros
