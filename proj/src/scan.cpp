#include "hypzeros/scan.hpp"

#include <algorithm>
#include <ostream>

#include "hypzeros/error.hpp"
#include "hypzeros/hyp2f1.hpp"
#include "hypzeros/oracle.hpp"
#include "hypzeros/sturm.hpp"

namespace hypzeros {

RationalRange RationalRange::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second =
      first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw Error(ErrorKind::Parse,
                "range must be min:max:step, got '" + std::string(text) + "'");
  }
  return {Rational::parse(text.substr(0, first)),
          Rational::parse(text.substr(first + 1, second - first - 1)),
          Rational::parse(text.substr(second + 1))};
}

std::vector<Rational> RationalRange::values() const {
  std::vector<Rational> out;
  for (Rational v = min; v <= max; v += step) out.push_back(v);
  return out;
}

const std::vector<std::string>& scan_columns() {
  static const std::vector<std::string> kColumns = {
      "c",        "b",         "region",       "sturm",   "pred_neg",
      "pred_unit", "pred_tail", "pred_nonreal", "num_neg", "num_unit",
      "num_tail",  "num_nonreal", "agree"};
  return kColumns;
}

void ScanSpec::validate() const {
  if (n < 2) throw Error(ErrorKind::InvalidParams, "scan needs n >= 2");
  for (const auto* r : {&b_range, &c_range}) {
    if (r->step.sign() <= 0) {
      throw Error(ErrorKind::InvalidParams, "range step must be positive");
    }
    if (r->min > r->max) {
      throw Error(ErrorKind::InvalidParams, "range is empty");
    }
  }
  if (margin.sign() < 0) {
    throw Error(ErrorKind::InvalidParams, "margin must be non-negative");
  }
  const auto& all = scan_columns();
  for (const auto& c : columns) {
    if (std::find(all.begin(), all.end(), c) == all.end()) {
      throw Error(ErrorKind::InvalidParams, "unknown column '" + c + "'");
    }
  }
}

namespace {

ScanRow evaluate_point(unsigned n, const Rational& c, const Rational& b) {
  const HypParams p{n, b, c};
  ScanRow row{c, b};

  bool region_simple = false;
  bool region_known = true;
  RegionLabel label = n >= 4 ? main_region(p) : smalln_real_simple(p).label;
  row.region = label.region;
  if (label.scheme == Scheme::Boundary) {
    region_known = false;
  } else {
    region_simple = label.scheme == Scheme::Main || label.scheme == Scheme::SmallN;
  }

  const SequenceTrace trace = build_sequence(build_2f1(p));
  row.sturm = trace.classification ? to_string(*trace.classification)
                                   : "Indeterminate";
  const bool sturm_simple = trace.classification == ZeroNature::AllRealSimple;

  try {
    row.predicted = predict_counts(p);
    row.predicted_status = row.predicted ? "Covered" : "NotCovered";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HypothesisBoundary) throw;
    row.predicted_status = "Boundary";
  }

  bool numeric_simple = false;
  try {
    const RootSet roots = find_roots(build_2f1(p));
    row.numeric = census(roots);
    numeric_simple = numerically_real_simple(roots);
    row.numeric_status = "Ok";
  } catch (const Error& e) {
    row.numeric_status = std::string(to_string(e.kind()));
  }

  bool agree = true;
  if (region_known) agree = agree && region_simple == sturm_simple;
  if (row.numeric) agree = agree && numeric_simple == sturm_simple;
  if (row.numeric && row.predicted) {
    agree = agree && row.predicted->same_counts(*row.numeric);
  }
  row.agree = agree;
  return row;
}

}  // namespace

std::vector<ScanRow> run_scan(const ScanSpec& spec) {
  spec.validate();
  const auto lines = all_boundary_lines(spec.n);
  std::vector<ScanRow> rows;
  for (const Rational& c : spec.c_range.values()) {
    for (const Rational& b : spec.b_range.values()) {
      if (!HypParams::violation(spec.n, b, c).empty()) continue;
      if (spec.margin.sign() > 0 && !clear_of_lines(lines, c, b, spec.margin)) {
        continue;
      }
      rows.push_back(evaluate_point(spec.n, c, b));
    }
  }
  return rows;
}

namespace {

std::string count_cell(const std::optional<ZeroReport>& r,
                       const std::string& status, int ZeroReport::*field) {
  if (!r) return status;
  return std::to_string((*r).*field);
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows,
               const std::vector<std::string>& columns) {
  const auto& cols = columns.empty() ? scan_columns() : columns;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    os << (i ? "," : "") << cols[i];
  }
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const std::string& col = cols[i];
      std::string cell;
      if (col == "c") cell = row.c.str();
      else if (col == "b") cell = row.b.str();
      else if (col == "region") cell = row.region;
      else if (col == "sturm") cell = row.sturm;
      else if (col == "pred_neg") cell = count_cell(row.predicted, row.predicted_status, &ZeroReport::neg);
      else if (col == "pred_unit") cell = count_cell(row.predicted, row.predicted_status, &ZeroReport::unit);
      else if (col == "pred_tail") cell = count_cell(row.predicted, row.predicted_status, &ZeroReport::tail);
      else if (col == "pred_nonreal") cell = count_cell(row.predicted, row.predicted_status, &ZeroReport::nonreal);
      else if (col == "num_neg") cell = count_cell(row.numeric, row.numeric_status, &ZeroReport::neg);
      else if (col == "num_unit") cell = count_cell(row.numeric, row.numeric_status, &ZeroReport::unit);
      else if (col == "num_tail") cell = count_cell(row.numeric, row.numeric_status, &ZeroReport::tail);
      else if (col == "num_nonreal") cell = count_cell(row.numeric, row.numeric_status, &ZeroReport::nonreal);
      else if (col == "agree") cell = row.agree ? "true" : "false";
      os << (i ? "," : "") << cell;
    }
    os << '\n';
  }
}

}  // namespace hypzeros
