#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypzeros/closedform.hpp"

namespace hypzeros {

enum class VerifyLevel { Quick, Full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::Quick;
  std::optional<FactorFlip> ck_flip;  // mutation hook for the c_k formula
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

// Each check is self-contained and deterministic (fixed seeds).

/// Division-sequence verdict is AllRealSimple exactly inside R1..R4.
CheckResult check_real_simple_regions(const VerifyOptions& opt);
/// n = 2, 3: verdict agrees with the sign of the witness.
CheckResult check_small_degree(const VerifyOptions& opt);
/// c_k and f_k of the trace match the closed forms inside every region.
CheckResult check_closed_forms(const VerifyOptions& opt);
/// theta closed forms equal the recurrence.
CheckResult check_theta(const VerifyOptions& opt);
CheckResult check_pfaff(const VerifyOptions& opt);
CheckResult check_jacobi(const VerifyOptions& opt);
/// Numeric census equals every predicted census.
CheckResult check_censuses(const VerifyOptions& opt);
/// z^k (z-1) takes the zero-remainder branch.
CheckResult check_degenerate_branch(const VerifyOptions& opt);

std::vector<CheckResult> run_verification(const VerifyOptions& opt);

}  // namespace hypzeros
