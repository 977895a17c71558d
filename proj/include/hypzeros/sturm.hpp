#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypzeros/hyp2f1.hpp"
#include "hypzeros/ratpoly.hpp"

namespace hypzeros {

enum class ZeroNature { AllRealSimple, AllRealWithMultiple, HasNonReal };

std::string to_string(ZeroNature nature);
ZeroNature zero_nature_from_string(const std::string& text);

/// One row of the division sequence. Row k holds f_k; when f_k is not
/// constant it also holds what dividing f_{k-1} by f_k produced:
///   f_{k-1} = q_{k-1} f_k - r_k,
/// with f_{k+1} = r_k, or f_{k+1} = f_k' when r_k vanishes.
struct StepRecord {
  std::size_t k = 0;
  RatPoly f;
  std::optional<RatPoly> quotient;   // q_{k-1}
  std::optional<RatPoly> remainder;  // r_k, sign as in f_{k-1} = q f_k - r_k
  bool took_derivative_branch = false;
  std::optional<Rational> c;         // c_k
  // Set by classify_2f1 when f_k = theta * 2F1(-n+k, b+2-k; c+1; z).
  std::optional<Rational> theta;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct SequenceOptions {
  // Rescale every new f_{k+1} to |lc| = 1. Only the signs of c_k survive,
  // so c values are stored as -1, 0 or 1.
  bool normalize = false;
};

struct SequenceTrace {
  std::vector<StepRecord> steps;
  // Empty when fewer than n-1 values were produced and none is negative.
  std::optional<ZeroNature> classification;
  bool normalized = false;

  std::vector<Rational> c_values() const;
  std::size_t degree() const { return steps.front().f.degree(); }

  friend bool operator==(const SequenceTrace&, const SequenceTrace&) = default;
};

/// Runs the division sequence to completion and classifies it, leaving
/// classification empty for an indeterminate trace. Throws DegreeTooSmall
/// for deg f < 2.
SequenceTrace build_sequence(const RatPoly& f, SequenceOptions options = {});

/// Sign test on the c values for a degree-n input.
std::optional<ZeroNature> classify_c_values(std::size_t n,
                                            const std::vector<Rational>& c);

/// build_sequence, throwing IndeterminateTrace when the sign test cannot
/// decide.
SequenceTrace run_sequence(const RatPoly& f, SequenceOptions options = {});

/// run_sequence on 2F1(-n,b;c;z), with each f_k (1 <= k <= n-1) annotated
/// by its ratio to 2F1(-n+k, b+2-k; c+1; z) when the two are proportional.
SequenceTrace classify_2f1(const HypParams& p);

/// Sets StepRecord::theta on every f_k (1 <= k <= n-1) proportional to
/// 2F1(-n+k, b+2-k; c+1; z).
void annotate_2f1_steps(SequenceTrace& trace, const HypParams& p);

/// The polynomial 2F1(-n+k, b+2-k; c+1; z) that f_k is proportional to.
RatPoly expected_step_shape(const HypParams& p, std::size_t k);

/// Returns s with a == s * b, if such a rational exists.
std::optional<Rational> proportionality(const RatPoly& a, const RatPoly& b);

}  // namespace hypzeros
