#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypzeros/hyp2f1.hpp"

namespace hypzeros {

/// Open half-plane coef_c * c + coef_b * b + constant > 0 in the (c, b) plane.
struct HalfPlane {
  Rational coef_c;
  Rational coef_b;
  Rational constant;
  std::string text;  // e.g. "b>c+2"

  Rational value(const Rational& c, const Rational& b) const {
    return coef_c * c + coef_b * b + constant;
  }
  /// Euclidean distance from (c, b) to the boundary line is >= margin.
  bool clear_of(const Rational& c, const Rational& b,
                const Rational& margin) const;
};

/// Intersection of open half-planes.
using Cell = std::vector<HalfPlane>;

enum class Membership { Inside, Boundary, Outside };

/// Inside: every inequality strict. Boundary: in the closure but not inside.
Membership locate(const Cell& cell, const Rational& c, const Rational& b);

enum class Scheme { Orthogonal, Main, SmallN, Outside, Boundary };

std::string to_string(Scheme scheme);

struct RegionLabel {
  Scheme scheme = Scheme::Outside;
  std::string region;  // "G1".."G3", "R1".."R4", "n2-iii", ... or the scheme
  std::string source;  // result family the label comes from
  std::string detail;  // the satisfied inequalities

  friend bool operator==(const RegionLabel&, const RegionLabel&) = default;
};

/// Orthogonality intervals: G1 = (0,1), G2 = (-inf,0), G3 = (1,inf).
RegionLabel orthogonality_region(const HypParams& p);

/// The four regions of real simple zeros for n >= 4. Throws WrongDegree.
RegionLabel main_region(const HypParams& p);

struct SmallNVerdict {
  RegionLabel label;
  /// b(c+1)(b-c) for n = 2; the cubic discriminant for n = 3.
  Rational witness;
};

/// Throws WrongDegree unless n is 2 or 3, WitnessUndefined at the poles.
SmallNVerdict smalln_real_simple(const HypParams& p);

/// 108 b^2 (b+1)(b-c-1)(b-c)^2 / (c^4 (c+1)^3 (c+2)^2).
Rational cubic_discriminant(const Rational& b, const Rational& c);

enum class CountSource { Predicted, Numeric };

struct ZeroReport {
  int neg = 0;      // (-inf, 0)
  int unit = 0;     // (0, 1)
  int tail = 0;     // (1, inf)
  int nonreal = 0;
  CountSource source = CountSource::Predicted;
  std::string tag;  // source family and case for predictions

  int total() const { return neg + unit + tail + nonreal; }
  bool same_counts(const ZeroReport& o) const {
    return neg == o.neg && unit == o.unit && tail == o.tail &&
           nonreal == o.nonreal;
  }
};

/// A hypothesis on (c, b) together with the zero census it guarantees.
struct Hypothesis {
  std::string source;     // "hilbert-klein", "quasi-orthogonal-2", ...
  std::string case_name;  // "i", "ii", ...
  int j = 0;              // index for the j-families, 0 otherwise
  Cell cell;
  ZeroReport counts;
  int precedence = 0;     // lower wins
  bool all_real_simple = false;

  std::string tag() const;
};

/// Every census hypothesis for degree n, in precedence order.
std::vector<Hypothesis> census_hypotheses(unsigned n);

/// Census predicted by the most specific matching hypothesis; nullopt when no
/// hypothesis covers (b, c). Throws HypothesisBoundary on a defining line.
std::optional<ZeroReport> predict_counts(const HypParams& p);

/// Interval census for c > 0. Throws PreconditionC and CaseBoundary.
ZeroReport hilbert_klein_counts(const HypParams& p);

/// Boundary lines of the four main regions for degree n.
std::vector<HalfPlane> main_region_lines(unsigned n);

/// Every line any scheme or hypothesis uses for degree n, plus the lines on
/// which some c_k vanishes (multiple zeros).
std::vector<HalfPlane> all_boundary_lines(unsigned n);

bool clear_of_lines(const std::vector<HalfPlane>& lines, const Rational& c,
                    const Rational& b, const Rational& margin);

}  // namespace hypzeros
