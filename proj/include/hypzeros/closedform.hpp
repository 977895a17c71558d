#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypzeros/hyp2f1.hpp"
#include "hypzeros/sturm.hpp"

namespace hypzeros {

/// Quotient of six Pochhammer symbols
///   ((k-n)/2)_l ((2k-n-b-3)/4)_l ((k-b-1+c)/2)_l
///   / ( ((k-b-2)/2)_l ((2k-b-1-n)/4)_l ((k-n-1-c)/2)_l ).
/// Throws DenominatorVanishes naming the vanishing factor.
Rational alpha(long k, unsigned l, const HypParams& p);

/// theta_1 .. theta_{n-1} from the two seeds and theta_{k+1} = alpha_{k,1}
/// theta_{k-1}. values[0] is theta_1.
struct ThetaSequence {
  std::vector<Rational> values;
  HypParams params;

  const Rational& at(std::size_t k) const { return values.at(k - 1); }
};

/// Throws SeedUndefined when c = 0 or b+n-1 = 0.
ThetaSequence theta_by_recurrence(const HypParams& p);

/// Even and odd closed forms for theta_k. Throws IndexOutOfRange past the
/// admissible index ranges.
Rational theta_closed_form(std::size_t k, const HypParams& p);

/// Test hook: negates one linear factor of the c_k (k >= 2) formula.
/// Numerator factors are 0..3, denominator factors 4..7 with the squared
/// factor counted twice (6 and 7).
struct FactorFlip {
  std::size_t index = 0;
};

inline constexpr std::size_t kCkFactorCount = 8;

/// Closed form of c_k for 1 <= k <= n-1.
Rational c_closed_form(std::size_t k, const HypParams& p,
                       std::optional<FactorFlip> flip = std::nullopt);

struct CrosscheckEntry {
  std::size_t k = 0;
  Rational c_trace;
  std::optional<Rational> c_closed;  // empty where the closed form is undefined
  std::optional<Rational> theta;     // recurrence value
  bool c_ok = false;
  bool proportionality_ok = false;
  std::string note;
};

struct CrosscheckReport {
  HypParams params;
  std::vector<CrosscheckEntry> entries;

  bool passed() const;
  /// Entries that failed, one line each.
  std::vector<std::string> failures() const;
};

/// Compares every c_k of the trace with its closed form and every f_k with
/// theta_k 2F1(-n+k, b+2-k; c+1; z). A derivative branch is accepted only at
/// the final step; anything earlier throws TraceDegenerate.
CrosscheckReport crosscheck(const HypParams& p,
                            std::optional<FactorFlip> flip = std::nullopt);

}  // namespace hypzeros
