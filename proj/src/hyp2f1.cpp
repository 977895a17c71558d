#include "hypzeros/hyp2f1.hpp"

#include "hypzeros/error.hpp"

namespace hypzeros {

bool in_nonpositive_run(const Rational& value, unsigned count) {
  if (!value.is_integer() || value.sign() > 0) return false;
  return -value < Rational(static_cast<long>(count));
}

std::string HypParams::violation(unsigned n, const Rational& b,
                                 const Rational& c) {
  if (n == 0) return "n must be positive";
  if (in_nonpositive_run(c, n)) {
    return "c = " + c.str() + " lies in {0, -1, ..., -(n-1)}";
  }
  if (in_nonpositive_run(b, n)) {
    return "b = " + b.str() + " lies in {0, -1, ..., -(n-1)}";
  }
  return {};
}

HypParams HypParams::make(unsigned n, const Rational& b, const Rational& c) {
  if (auto why = violation(n, b, c); !why.empty()) {
    throw Error(ErrorKind::InvalidParams, why);
  }
  return HypParams{n, b, c};
}

Rational pochhammer(const Rational& a, unsigned k) {
  Rational result(1);
  Rational term = a;
  for (unsigned i = 0; i < k; ++i) {
    result *= term;
    term += Rational(1);
  }
  return result;
}

RatPoly terminating_2f1(unsigned m, const Rational& b, const Rational& c) {
  if (in_nonpositive_run(c, m)) {
    throw Error(ErrorKind::InvalidParams,
                "(c)_m vanishes for c = " + c.str());
  }
  std::vector<Rational> coeffs(m + 1);
  Rational term(1);
  coeffs[0] = term;
  const Rational minus_m(-static_cast<long>(m));
  for (unsigned k = 0; k < m; ++k) {
    const Rational kk(static_cast<long>(k));
    term *= (minus_m + kk) * (b + kk) / ((c + kk) * Rational(k + 1L));
    coeffs[k + 1] = term;
  }
  return RatPoly(std::move(coeffs));
}

RatPoly build_2f1(const HypParams& p) {
  HypParams::make(p.n, p.b, p.c);
  return terminating_2f1(p.n, p.b, p.c);
}

PfaffPartner pfaff_partner(const HypParams& p) {
  HypParams::make(p.n, p.b, p.c);
  const Rational c2 = Rational(1L - static_cast<long>(p.n)) + p.b - p.c;
  if (in_nonpositive_run(c2, p.n)) {
    throw Error(ErrorKind::PartnerInvalid,
                "partner third parameter 1-n+b-c = " + c2.str() +
                    " is excluded");
  }
  return {pochhammer(p.c - p.b, p.n) / pochhammer(p.c, p.n),
          HypParams{p.n, p.b, c2}};
}

PfaffSides pfaff_sides(const HypParams& p) {
  HypParams::make(p.n, p.b, p.c);
  RatPoly series;
  try {
    const PfaffPartner pp = pfaff_partner(p);
    series = terminating_2f1(p.n, p.b, pp.partner.c) * pp.scale;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PartnerInvalid) throw;
    // An excluded partner parameter is matched by a zero in (c-b)_n; with
    // (c-b)_n / (1-n+b-c)_k = (-1)^k (c-b)_{n-k} the product stays finite.
    const Rational cn = pochhammer(p.c, p.n);
    std::vector<Rational> coefs;
    for (unsigned k = 0; k <= p.n; ++k) {
      Rational t = pochhammer(p.c - p.b, p.n - k) *
                   pochhammer(Rational(-static_cast<long>(p.n)), k) *
                   pochhammer(p.b, k) / (cn * factorial(k));
      coefs.push_back(k % 2 ? -t : t);
    }
    series = RatPoly(std::move(coefs));
  }
  return {build_2f1(p), compose_affine(series, Rational(-1), Rational(1))};
}

namespace {

Rational binomial(const Rational& top, unsigned k) {
  return pochhammer(top - Rational(static_cast<long>(k)) + Rational(1), k) /
         factorial(k);
}

void require_2f1_defined(unsigned n, const Rational& c, const char* what) {
  if (in_nonpositive_run(c, n)) {
    throw Error(ErrorKind::InvalidParams,
                std::string(what) + " = " + c.str() +
                    " makes the hypergeometric polynomial undefined");
  }
}

}  // namespace

RatPoly jacobi_poly(const JacobiParams& j) {
  const Rational one(1);
  const Rational n(static_cast<long>(j.n));
  if (in_nonpositive_run(one + j.alpha + j.beta + n, j.n)) {
    throw Error(ErrorKind::InvalidParams,
                "1+alpha+beta+n lies in {0, -1, ..., -(n-1)}");
  }
  return jacobi_representation_rhs(JacobiRep::ShiftedArgument, j);
}

RatPoly jacobi_reference(const JacobiParams& j) {
  const Rational n(static_cast<long>(j.n));
  const Rational half(1, 2);
  const RatPoly xm = RatPoly::linear(half, -half);  // (x-1)/2
  const RatPoly xp = RatPoly::linear(half, half);   // (x+1)/2
  RatPoly acc;
  for (unsigned s = 0; s <= j.n; ++s) {
    const Rational w = binomial(n + j.alpha, j.n - s) * binomial(n + j.beta, s);
    if (w.is_zero()) continue;
    acc += power(xm, s) * power(xp, j.n - s) * w;
  }
  return acc;
}

std::string to_string(JacobiRep rep) {
  switch (rep) {
    case JacobiRep::ShiftedArgument: return "shifted";
    case JacobiRep::InverseArgument: return "inverse";
    case JacobiRep::MobiusArgument: return "mobius";
  }
  return "unknown";
}

RatPoly jacobi_representation_rhs(JacobiRep rep, const JacobiParams& j) {
  const unsigned n = j.n;
  const Rational nn(static_cast<long>(n));
  const Rational one(1);
  const Rational half(1, 2);
  const Rational two_pow_n(mpq_class(mpz_class(1) << n));
  switch (rep) {
    case JacobiRep::ShiftedArgument: {
      const Rational c = one + j.beta;
      require_2f1_defined(n, c, "1+beta");
      const Rational scale = (n % 2 == 0 ? one : -one) * pochhammer(c, n) /
                             factorial(n);
      const RatPoly f = terminating_2f1(n, one + j.alpha + j.beta + nn, c);
      return compose_affine(f, half, half) * scale;
    }
    case JacobiRep::InverseArgument: {
      // K ((x+1)/2)^n F(2/(x+1)) = K 2^-n sum_k F_k 2^k (x+1)^(n-k).
      const Rational s = one + j.alpha + j.beta;
      const Rational lower = pochhammer(s, n);
      if (lower.is_zero()) {
        throw Error(ErrorKind::InvalidParams,
                    "(1+alpha+beta)_n vanishes in the inverse-argument form");
      }
      const Rational b = -j.beta - nn;
      const Rational c = -j.alpha - j.beta - Rational(2) * nn;
      const RatPoly xp1 = RatPoly::linear(one, one);
      const RatPoly two = RatPoly::constant(Rational(2));
      if (!in_nonpositive_run(c, n)) {
        const Rational scale =
            pochhammer(s, 2 * n) / (factorial(n) * lower) / two_pow_n;
        return homogenize(terminating_2f1(n, b, c), n, two, xp1) * scale;
      }
      // (c)_k vanishes for some k <= n. Cancel it against (s)_2n, using
      // (s)_2n / (c)_k = (-1)^k (s)_(2n-k), which keeps every term finite.
      RatPoly acc;
      const Rational minus_n = -nn;
      for (unsigned k = 0; k <= n; ++k) {
        const Rational sign = k % 2 == 0 ? one : -one;
        const Rational coeff = sign * pochhammer(s, 2 * n - k) *
                               pochhammer(minus_n, k) * pochhammer(b, k) /
                               (factorial(n) * lower * factorial(k));
        if (coeff.is_zero()) continue;
        acc += homogenize(RatPoly::monomial(coeff, k), n, two, xp1);
      }
      return acc * (one / two_pow_n);
    }
    case JacobiRep::MobiusArgument: {
      // (1+b)_n/n! ((x-1)/2)^n F((x+1)/(x-1)) with F cleared term by term.
      const Rational c = j.beta + one;
      require_2f1_defined(n, c, "beta+1");
      const Rational scale = pochhammer(c, n) / factorial(n) / two_pow_n;
      const RatPoly f = terminating_2f1(n, -j.alpha - nn, c);
      return homogenize(f, n, RatPoly::linear(one, one),
                        RatPoly::linear(one, -one)) *
             scale;
    }
  }
  throw Error(ErrorKind::InvalidParams, "unknown representation");
}

bool verify_jacobi_representation(JacobiRep rep, const JacobiParams& j) {
  return jacobi_representation_rhs(rep, j) == jacobi_reference(j);
}

}  // namespace hypzeros
