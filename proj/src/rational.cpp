#include "hypzeros/rational.hpp"

#include <cmath>
#include <ostream>

#include "hypzeros/error.hpp"

namespace hypzeros {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DivisorZero: return "DivisorZero";
    case ErrorKind::DegreeOrder: return "DegreeOrder";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::PartnerInvalid: return "PartnerInvalid";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::IndeterminateTrace: return "IndeterminateTrace";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::SeedUndefined: return "SeedUndefined";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::TraceDegenerate: return "TraceDegenerate";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::WitnessUndefined: return "WitnessUndefined";
    case ErrorKind::HypothesisBoundary: return "HypothesisBoundary";
    case ErrorKind::PreconditionC: return "PreconditionC";
    case ErrorKind::CaseBoundary: return "CaseBoundary";
    case ErrorKind::ConversionOverflow: return "ConversionOverflow";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BoundaryAmbiguity: return "BoundaryAmbiguity";
    case ErrorKind::NotAllReal: return "NotAllReal";
  }
  return "Unknown";
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::Parse, "zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::Parse,
                "not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::Parse,
                "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return value_.get_str(10); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

long double Rational::to_long_double() const {
  if (is_zero()) return 0.0L;
  mpz_class num = ::abs(value_.get_num());
  const mpz_class& den = value_.get_den();
  // Scale so the integer quotient carries 64 significant bits.
  const long shift = 64 + static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) -
                     static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  mpz_class quotient;
  if (shift >= 0) {
    mpz_class scaled = num << static_cast<unsigned long>(shift);
    mpz_tdiv_q(quotient.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_class scaled = den << static_cast<unsigned long>(-shift);
    mpz_tdiv_q(quotient.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
  }
  long extra = static_cast<long>(mpz_sizeinbase(quotient.get_mpz_t(), 2)) - 64;
  if (extra > 0) {
    quotient >>= static_cast<unsigned long>(extra);
  } else {
    extra = 0;
  }
  const unsigned long mantissa = mpz_get_ui(quotient.get_mpz_t());
  const long double magnitude = std::ldexp(static_cast<long double>(mantissa),
                                           static_cast<int>(extra - shift));
  return sign() < 0 ? -magnitude : magnitude;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw Error(ErrorKind::DenominatorVanishes, "division by zero rational");
  }
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

Rational factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(mpq_class(f));
}

}  // namespace hypzeros
