#include "hypzeros/regions.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypzeros/error.hpp"

namespace hypzeros {

bool HalfPlane::clear_of(const Rational& c, const Rational& b,
                         const Rational& margin) const {
  const Rational v = value(c, b);
  const Rational norm2 = coef_c * coef_c + coef_b * coef_b;
  return v * v >= margin * margin * norm2;
}

Membership locate(const Cell& cell, const Rational& c, const Rational& b) {
  bool on_line = false;
  for (const auto& h : cell) {
    const int s = h.value(c, b).sign();
    if (s < 0) return Membership::Outside;
    if (s == 0) on_line = true;
  }
  return on_line ? Membership::Boundary : Membership::Inside;
}

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::Orthogonal: return "Orthogonal";
    case Scheme::Main: return "Main";
    case Scheme::SmallN: return "SmallN";
    case Scheme::Outside: return "Outside";
    case Scheme::Boundary: return "Boundary";
  }
  return "Unknown";
}

namespace {

Rational R(long v) { return Rational(v); }

std::string offset(const std::string& var, const Rational& x) {
  if (x.is_zero()) return var;
  return var + (x.sign() > 0 ? "+" : "-") + x.abs().str();
}

HalfPlane c_gt(const Rational& x) { return {R(1), R(0), -x, "c>" + x.str()}; }
HalfPlane c_lt(const Rational& x) { return {R(-1), R(0), x, "c<" + x.str()}; }
HalfPlane b_gt(const Rational& x) { return {R(0), R(1), -x, "b>" + x.str()}; }
HalfPlane b_lt(const Rational& x) { return {R(0), R(-1), x, "b<" + x.str()}; }
HalfPlane b_gt_c_plus(const Rational& x) {
  return {R(-1), R(1), -x, "b>" + offset("c", x)};
}
HalfPlane b_lt_c_plus(const Rational& x) {
  return {R(1), R(-1), x, "b<" + offset("c", x)};
}

std::string describe(const Cell& cell) {
  std::string out;
  for (const auto& h : cell) {
    if (!out.empty()) out += ", ";
    out += h.text;
  }
  return out;
}

struct NamedCell {
  std::string region;
  Cell cell;
};

RegionLabel label_from(const std::vector<NamedCell>& cells, Scheme scheme,
                       const std::string& source, const Rational& c,
                       const Rational& b) {
  bool boundary = false;
  for (const auto& nc : cells) {
    switch (locate(nc.cell, c, b)) {
      case Membership::Inside:
        return {scheme, nc.region, source, describe(nc.cell)};
      case Membership::Boundary:
        boundary = true;
        break;
      case Membership::Outside:
        break;
    }
  }
  if (boundary) return {Scheme::Boundary, "Boundary", source, "on a defining line"};
  return {Scheme::Outside, "Outside", source, "no region matches"};
}

std::vector<NamedCell> orthogonality_cells(unsigned n) {
  const Rational nn(static_cast<long>(n));
  return {
      {"G1", {c_gt(R(0)), b_gt_c_plus(nn - R(1))}},
      {"G2", {c_gt(R(0)), b_lt(R(1) - nn)}},
      {"G3", {b_gt_c_plus(nn - R(1)), b_lt(R(1) - nn)}},
  };
}

std::vector<NamedCell> main_cells(unsigned n) {
  const Rational nn(static_cast<long>(n));
  return {
      {"R1", {b_gt_c_plus(nn - R(2)), b_lt(R(2) - nn)}},
      {"R2", {c_gt(R(-1)), b_lt(R(2) - nn)}},
      {"R3", {c_gt(R(-1)), b_gt(nn - R(2)), b_gt_c_plus(nn - R(2))}},
      {"R4", {c_gt(R(-1)), c_lt(R(0)), b_gt_c_plus(nn - R(2)), b_lt(nn - R(2))}},
  };
}

std::vector<NamedCell> smalln_cells(unsigned n) {
  if (n == 2) {
    return {
        {"n2-i", {c_lt(R(-1)), b_gt_c_plus(R(0)), b_lt(R(0))}},
        {"n2-ii", {c_gt(R(-1)), c_lt(R(0)), b_gt(R(0))}},
        {"n2-ii", {c_gt(R(-1)), c_lt(R(0)), b_lt_c_plus(R(0))}},
        {"n2-iii", {c_gt(R(0)), b_lt(R(0))}},
        {"n2-iii", {c_gt(R(0)), b_gt_c_plus(R(0))}},
    };
  }
  return {
      {"n3-i", {c_lt(R(-2)), b_gt_c_plus(R(1)), b_lt(R(-1))}},
      {"n3-ii", {c_gt(R(-2)), c_lt(R(-1)), b_gt(R(-1)), b_lt_c_plus(R(1))}},
      {"n3-iii", {c_gt(R(-1)), b_lt(R(-1))}},
      {"n3-iii", {c_gt(R(-1)), b_gt_c_plus(R(1))}},
  };
}

ZeroReport predicted(int neg, int unit, int tail, int nonreal) {
  return {neg, unit, tail, nonreal, CountSource::Predicted, {}};
}

// Census for j real zeros in one interval with n-j left over: an even
// remainder is all non-real, an odd one leaves one real zero in (1, inf).
ZeroReport with_remainder(unsigned n, int j, bool negative) {
  const int rest = static_cast<int>(n) - j;
  const int tail = rest % 2;
  return negative ? predicted(j, 0, tail, rest - tail)
                  : predicted(0, j, tail, rest - tail);
}

std::vector<Hypothesis> hilbert_klein_hypotheses(unsigned n) {
  const Rational nn(static_cast<long>(n));
  const int ni = static_cast<int>(n);
  std::vector<Hypothesis> out;
  const std::string src = "hilbert-klein";
  out.push_back({src, "i", 0, {c_gt(R(0)), b_gt_c_plus(nn)},
                 predicted(0, ni, 0, 0), 3, true});
  for (int j = 1; j <= ni; ++j) {
    out.push_back({src, "ii", j,
                   {c_gt(R(0)), b_gt_c_plus(R(j - 1)), b_lt_c_plus(R(j))},
                   with_remainder(n, j, false), 3, j == ni});
  }
  out.push_back({src, "iii", 0, {c_gt(R(0)), b_gt(R(0)), b_lt_c_plus(R(0))},
                 with_remainder(n, 0, false), 3, false});
  for (int j = 1; j <= ni; ++j) {
    out.push_back({src, "iv", j, {c_gt(R(0)), b_gt(R(-j)), b_lt(R(1 - j))},
                   with_remainder(n, j, true), 3, j == ni});
  }
  out.push_back({src, "v", 0, {c_gt(R(0)), b_lt(-nn)},
                 predicted(ni, 0, 0, 0), 3, true});
  return out;
}

}  // namespace

RegionLabel orthogonality_region(const HypParams& p) {
  return label_from(orthogonality_cells(p.n), Scheme::Orthogonal,
                    "orthogonality", p.c, p.b);
}

RegionLabel main_region(const HypParams& p) {
  if (p.n < 4) {
    throw Error(ErrorKind::WrongDegree, "main regions need n >= 4");
  }
  return label_from(main_cells(p.n), Scheme::Main, "real-simple-regions", p.c,
                    p.b);
}

Rational cubic_discriminant(const Rational& b, const Rational& c) {
  const Rational c1 = c + R(1);
  const Rational c2 = c + R(2);
  const Rational den = c * c * c * c * c1 * c1 * c1 * c2 * c2;
  if (den.is_zero()) {
    throw Error(ErrorKind::WitnessUndefined,
                "discriminant has a pole at c = " + c.str());
  }
  const Rational bc = b - c;
  return R(108) * b * b * (b + R(1)) * (bc - R(1)) * bc * bc / den;
}

SmallNVerdict smalln_real_simple(const HypParams& p) {
  if (p.n != 2 && p.n != 3) {
    throw Error(ErrorKind::WrongDegree, "small-degree test needs n = 2 or 3");
  }
  Rational witness;
  if (p.n == 2) {
    if (p.c == R(-1)) {
      throw Error(ErrorKind::WitnessUndefined, "c = -1");
    }
    witness = p.b * (p.c + R(1)) * (p.b - p.c);
  } else {
    witness = cubic_discriminant(p.b, p.c);
  }
  return {label_from(smalln_cells(p.n), Scheme::SmallN, "small-degree", p.c,
                     p.b),
          witness};
}

std::string Hypothesis::tag() const {
  std::string t = source + " (" + case_name + ")";
  if (j > 0) t += " j=" + std::to_string(j);
  return t;
}

std::vector<Hypothesis> census_hypotheses(unsigned n) {
  const Rational nn(static_cast<long>(n));
  const int ni = static_cast<int>(n);
  std::vector<Hypothesis> out;

  const std::string q2 = "quasi-orthogonal-2";
  out.push_back({q2, "i", 0,
                 {c_gt(R(-1)), c_lt(R(0)), b_gt_c_plus(nn - R(2)),
                  b_lt_c_plus(nn - R(1))},
                 predicted(1, ni - 2, 1, 0), 0, true});
  // b-n+1 < c < b-n+2  <=>  c+n-2 < b < c+n-1
  out.push_back({q2, "ii", 0,
                 {b_gt(R(1) - nn), b_lt(R(2) - nn), b_gt_c_plus(nn - R(2)),
                  b_lt_c_plus(nn - R(1))},
                 predicted(1, 1, ni - 2, 0), 0, true});
  out.push_back({q2, "iii", 0,
                 {c_gt(R(-1)), c_lt(R(0)), b_gt(R(1) - nn), b_lt(R(2) - nn)},
                 predicted(ni - 2, 1, 1, 0), 0, true});

  const std::string qb = "quasi-orthogonal-1-beta";
  out.push_back({qb, "i", 0,
                 {c_gt(R(-1)), c_lt(R(0)), b_gt_c_plus(nn - R(1))},
                 predicted(1, ni - 1, 0, 0), 1, true});
  // c < b-n-1  <=>  b > c+n+1, as printed.
  out.push_back({qb, "ii", 0,
                 {b_gt(R(1) - nn), b_lt(R(2) - nn), b_gt_c_plus(nn + R(1))},
                 predicted(1, 0, ni - 1, 0), 1, true});
  out.push_back({qb, "iii", 0, {c_gt(R(-1)), c_lt(R(0)), b_lt(R(1) - nn)},
                 predicted(ni - 1, 1, 0, 0), 1, true});

  const std::string qa = "quasi-orthogonal-1-alpha";
  out.push_back({qa, "i", 0,
                 {c_gt(R(0)), b_gt_c_plus(nn - R(2)), b_lt_c_plus(nn - R(1))},
                 predicted(0, ni - 1, 1, 0), 1, true});
  out.push_back({qa, "ii", 0,
                 {b_lt(R(1) - nn), b_gt_c_plus(nn - R(2)),
                  b_lt_c_plus(nn - R(1))},
                 predicted(0, 1, ni - 1, 0), 1, true});
  out.push_back({qa, "iii", 0, {c_gt(R(0)), b_gt(R(1) - nn), b_lt(R(2) - nn)},
                 predicted(ni - 1, 0, 1, 0), 1, true});

  const std::string og = "orthogonality";
  out.push_back({og, "i", 0, {c_gt(R(0)), b_lt(R(1) - nn)},
                 predicted(ni, 0, 0, 0), 2, true});
  out.push_back({og, "ii", 0, {c_gt(R(0)), b_gt_c_plus(nn - R(1))},
                 predicted(0, ni, 0, 0), 2, true});
  out.push_back({og, "iii", 0, {b_gt_c_plus(nn - R(1)), b_lt(R(1) - nn)},
                 predicted(0, 0, ni, 0), 2, true});

  for (auto& h : hilbert_klein_hypotheses(n)) out.push_back(std::move(h));
  for (auto& h : out) h.counts.tag = h.tag();
  std::stable_sort(out.begin(), out.end(),
                   [](const Hypothesis& a, const Hypothesis& b) {
                     return a.precedence < b.precedence;
                   });
  return out;
}

std::optional<ZeroReport> predict_counts(const HypParams& p) {
  const auto hyps = census_hypotheses(p.n);
  const Hypothesis* chosen = nullptr;
  bool boundary = false;
  for (const auto& h : hyps) {
    switch (locate(h.cell, p.c, p.b)) {
      case Membership::Inside:
        if (!chosen) {
          chosen = &h;
        } else if (!chosen->counts.same_counts(h.counts)) {
          throw std::logic_error("overlapping hypotheses disagree: " +
                                 chosen->tag() + " vs " + h.tag());
        }
        break;
      case Membership::Boundary:
        boundary = true;
        break;
      case Membership::Outside:
        break;
    }
  }
  if (chosen) return chosen->counts;
  if (boundary) {
    throw Error(ErrorKind::HypothesisBoundary,
                "(c, b) = (" + p.c.str() + ", " + p.b.str() +
                    ") lies on a hypothesis line");
  }
  return std::nullopt;
}

ZeroReport hilbert_klein_counts(const HypParams& p) {
  if (p.c.sign() <= 0) {
    throw Error(ErrorKind::PreconditionC, "requires c > 0");
  }
  for (unsigned i = 0; i <= p.n; ++i) {
    const Rational ii(static_cast<long>(i));
    if (p.b == p.c + ii || p.b == -ii) {
      throw Error(ErrorKind::CaseBoundary,
                  "b = " + p.b.str() + " sits between two cases");
    }
  }
  for (auto& h : hilbert_klein_hypotheses(p.n)) {
    if (locate(h.cell, p.c, p.b) == Membership::Inside) {
      h.counts.tag = h.tag();
      return h.counts;
    }
  }
  throw std::logic_error("hilbert-klein cases do not cover the half-plane");
}

std::vector<HalfPlane> main_region_lines(unsigned n) {
  std::vector<HalfPlane> out;
  for (const auto& nc : main_cells(n)) {
    out.insert(out.end(), nc.cell.begin(), nc.cell.end());
  }
  return out;
}

std::vector<HalfPlane> all_boundary_lines(unsigned n) {
  std::vector<HalfPlane> out = main_region_lines(n);
  for (const auto& nc : orthogonality_cells(n)) {
    out.insert(out.end(), nc.cell.begin(), nc.cell.end());
  }
  for (unsigned m : {2u, 3u}) {
    for (const auto& nc : smalln_cells(m)) {
      out.insert(out.end(), nc.cell.begin(), nc.cell.end());
    }
  }
  for (const auto& h : census_hypotheses(n)) {
    out.insert(out.end(), h.cell.begin(), h.cell.end());
  }
  // Lines on which some c_k vanishes: b = k-1 and b = c+k-1.
  for (unsigned k = 1; k < n; ++k) {
    const Rational km1(static_cast<long>(k) - 1);
    out.push_back(b_gt(km1));
    out.push_back(b_gt_c_plus(km1));
  }
  return out;
}

bool clear_of_lines(const std::vector<HalfPlane>& lines, const Rational& c,
                    const Rational& b, const Rational& margin) {
  return std::all_of(lines.begin(), lines.end(), [&](const HalfPlane& h) {
    return h.clear_of(c, b, margin);
  });
}

}  // namespace hypzeros
