#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypzeros/regions.hpp"

namespace hypzeros {

/// Inclusive arithmetic progression min, min+step, ..., <= max.
struct RationalRange {
  Rational min;
  Rational max;
  Rational step;

  /// "min:max:step", each part a rational literal.
  static RationalRange parse(std::string_view text);
  std::vector<Rational> values() const;
};

struct ScanSpec {
  unsigned n = 4;
  RationalRange b_range;
  RationalRange c_range;
  Rational margin;  // grid points closer than this to any boundary line are dropped
  std::vector<std::string> columns;  // empty means every column

  /// Throws InvalidParams for an empty range, a non-positive step, a negative
  /// margin, n < 2 or an unknown column.
  void validate() const;
};

struct ScanRow {
  Rational c;
  Rational b;
  std::string region;
  std::string sturm;
  std::optional<ZeroReport> predicted;
  std::string predicted_status;  // "Covered", "NotCovered" or "Boundary"
  std::optional<ZeroReport> numeric;
  std::string numeric_status;    // "Ok" or the oracle error
  bool agree = false;
};

const std::vector<std::string>& scan_columns();

/// Rows ordered c outer ascending, b inner ascending.
std::vector<ScanRow> run_scan(const ScanSpec& spec);

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows,
               const std::vector<std::string>& columns = {});

}  // namespace hypzeros
