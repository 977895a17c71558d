#pragma once

#include <string>

#include "hypzeros/ratpoly.hpp"

namespace hypzeros {

/// Parameters of the terminating series 2F1(-n, b; c; z). Construct through
/// make(), which rejects c and b in {0, -1, ..., -(n-1)}.
struct HypParams {
  unsigned n = 1;
  Rational b;
  Rational c;

  static HypParams make(unsigned n, const Rational& b, const Rational& c);
  /// Human-readable reason the triple is invalid, or empty when valid.
  static std::string violation(unsigned n, const Rational& b,
                               const Rational& c);

  friend bool operator==(const HypParams&, const HypParams&) = default;
};

struct JacobiParams {
  unsigned n = 1;
  Rational alpha;
  Rational beta;
};

/// True when value is one of 0, -1, ..., -(count-1).
bool in_nonpositive_run(const Rational& value, unsigned count);

/// a(a+1)...(a+k-1), and 1 for k = 0 (including a = 0).
Rational pochhammer(const Rational& a, unsigned k);

/// sum_{k=0..m} (-m)_k (b)_k / ((c)_k k!) z^k with no restriction on b, so the
/// degree may fall below m. Throws InvalidParams when (c)_m = 0.
RatPoly terminating_2f1(unsigned m, const Rational& b, const Rational& c);

/// 2F1(-n, b; c; z) for validated parameters: degree exactly n, constant
/// term 1.
RatPoly build_2f1(const HypParams& p);

struct PfaffPartner {
  Rational scale;     // (c-b)_n / (c)_n
  HypParams partner;  // (n, b, 1-n+b-c), evaluated at 1-z
};

/// 2F1(-n,b;c;z) = scale * 2F1(-n,b;1-n+b-c;1-z). Throws PartnerInvalid when
/// the partner's third parameter is excluded.
PfaffPartner pfaff_partner(const HypParams& p);

/// Both sides of the Pfaff identity expanded as polynomials in z. When the
/// partner parameter is excluded the scale is zero and the right side is
/// expanded with the cancelled coefficients (-1)^k (c-b)_{n-k} (-n)_k (b)_k
/// / ((c)_n k!).
struct PfaffSides {
  RatPoly direct;
  RatPoly transformed;
};
PfaffSides pfaff_sides(const HypParams& p);

/// P_n^(alpha,beta)(x) through the (x+1)/2 hypergeometric representation.
/// Requires 1+beta and 1+alpha+beta+n outside {0, -1, ..., -(n-1)}.
RatPoly jacobi_poly(const JacobiParams& j);

/// P_n^(alpha,beta)(x) from the explicit binomial sum
///   sum_s C(n+alpha, n-s) C(n+beta, s) ((x-1)/2)^s ((x+1)/2)^(n-s),
/// defined for every rational alpha, beta.
RatPoly jacobi_reference(const JacobiParams& j);

enum class JacobiRep {
  ShiftedArgument,   // 2F1(-n, 1+a+b+n; 1+b; (x+1)/2)
  InverseArgument,   // ((x+1)/2)^n 2F1(-n, -b-n; -a-b-2n; 2/(x+1))
  MobiusArgument,    // ((x-1)/2)^n 2F1(-n, -a-n; b+1; (x+1)/(x-1))
};

std::string to_string(JacobiRep rep);

/// The right-hand side of the chosen representation as a polynomial in x.
/// The rational-argument forms are multiplied out term by term, which is the
/// same as clearing (x+1)^n or (x-1)^n from both sides. Throws InvalidParams
/// when the representation is undefined at these parameters.
RatPoly jacobi_representation_rhs(JacobiRep rep, const JacobiParams& j);

/// Exact check of the representation against jacobi_reference.
bool verify_jacobi_representation(JacobiRep rep, const JacobiParams& j);

}  // namespace hypzeros
