#include "hypzeros/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "hypzeros/error.hpp"
#include "hypzeros/oracle.hpp"
#include "hypzeros/regions.hpp"
#include "hypzeros/sturm.hpp"

namespace hypzeros {

namespace {

const Rational kMargin(1, 20);

bool full(const VerifyOptions& opt) { return opt.level == VerifyLevel::Full; }

std::string point(unsigned n, const Rational& b, const Rational& c) {
  return "n=" + std::to_string(n) + " b=" + b.str() + " c=" + c.str();
}

void record(CheckResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (!ok && r.failures.size() < 50) r.failures.push_back(what);
}

CheckResult finish(CheckResult r) {
  r.passed = r.failures.empty() && r.cases > 0;
  return r;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational(const Rational& lo, const Rational& hi) {
    const long den = std::uniform_int_distribution<long>(1, 16)(rng_);
    const Rational a = lo * Rational(den);
    const Rational b = hi * Rational(den);
    const long from = floor_long(a);
    const long to = floor_long(b) + 1;
    const long num = std::uniform_int_distribution<long>(from, to)(rng_);
    return Rational(num, den);
  }

  unsigned degree(unsigned lo, unsigned hi) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng_);
  }

 private:
  static long floor_long(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
    return f.get_si();
  }

  std::mt19937_64 rng_;
};

std::vector<Rational> grid(long half_width) {
  std::vector<Rational> out;
  for (long i = -2 * half_width; i <= 2 * half_width; ++i) {
    out.emplace_back(i, 2);
  }
  return out;
}

}  // namespace

CheckResult check_real_simple_regions(const VerifyOptions& opt) {
  CheckResult r{1, "real simple zeros exactly on R1..R4"};
  const unsigned top = full(opt) ? 10 : 6;
  const auto axis = grid(full(opt) ? 12 : 6);
  std::size_t inside = 0, indeterminate = 0;
  for (unsigned n = 4; n <= top; ++n) {
    const auto lines = main_region_lines(n);
    for (const auto& c : axis) {
      for (const auto& b : axis) {
        if (!HypParams::violation(n, b, c).empty()) continue;
        if (!clear_of_lines(lines, c, b, kMargin)) continue;
        const HypParams p{n, b, c};
        const bool in_region = main_region(p).scheme == Scheme::Main;
        const SequenceTrace t = build_sequence(build_2f1(p));
        if (!t.classification) ++indeterminate;
        const bool simple = t.classification == ZeroNature::AllRealSimple;
        inside += in_region;
        record(r, in_region == simple,
               point(n, b, c) + (in_region ? " in region but " : " outside but ") +
                   (t.classification ? to_string(*t.classification)
                                     : std::string("Indeterminate")));
      }
    }
  }
  r.notes.push_back(std::to_string(inside) + " points inside, " +
                    std::to_string(indeterminate) + " indeterminate traces");
  return finish(r);
}

CheckResult check_small_degree(const VerifyOptions& opt) {
  CheckResult r{2, "n = 2, 3 verdict matches witness sign"};
  const auto axis = grid(full(opt) ? 12 : 6);
  for (unsigned n = 2; n <= 3; ++n) {
    for (const auto& c : axis) {
      for (const auto& b : axis) {
        if (!HypParams::violation(n, b, c).empty()) continue;
        const HypParams p{n, b, c};
        const SmallNVerdict v = smalln_real_simple(p);
        const SequenceTrace t = build_sequence(build_2f1(p));
        const bool simple = t.classification == ZeroNature::AllRealSimple;
        const bool label_simple = v.label.scheme == Scheme::SmallN;
        record(r, (v.witness.sign() > 0) == simple && label_simple == simple,
               point(n, b, c) + " witness=" + v.witness.str() + " label=" +
                   v.label.region);
      }
    }
  }
  return finish(r);
}

namespace {

struct Box {
  Rational c_lo, c_hi, b_lo, b_hi;
};

Box region_box(const std::string& region, unsigned n) {
  const Rational nn(static_cast<long>(n));
  const Rational L(static_cast<long>(3 * n + 6));
  if (region == "R1") return {-L, Rational(4) - Rational(2) * nn, -L, Rational(2) - nn};
  if (region == "R2") return {Rational(-1), L, -L, Rational(2) - nn};
  if (region == "R3") return {Rational(-1), L, nn - Rational(2), L + nn};
  return {Rational(-1), Rational(0), nn - Rational(3), nn - Rational(2)};
}

}  // namespace

CheckResult check_closed_forms(const VerifyOptions& opt) {
  CheckResult r{3, "trace c_k and f_k match closed forms"};
  Sampler s(3);
  const unsigned top = full(opt) ? 10 : 6;
  const int per_region = full(opt) ? 20 : 3;
  for (unsigned n = 4; n <= top; ++n) {
    const auto lines = main_region_lines(n);
    for (const std::string region : {"R1", "R2", "R3", "R4"}) {
      const Box box = region_box(region, n);
      int got = 0;
      for (int attempt = 0; got < per_region && attempt < 100000; ++attempt) {
        const Rational c = s.rational(box.c_lo, box.c_hi);
        const Rational b = s.rational(box.b_lo, box.b_hi);
        if (!HypParams::violation(n, b, c).empty()) continue;
        if (!clear_of_lines(lines, c, b, kMargin)) continue;
        const HypParams p{n, b, c};
        if (main_region(p).region != region) continue;
        CrosscheckReport rep;
        try {
          rep = crosscheck(p, opt.ck_flip);
        } catch (const Error& e) {
          record(r, false, point(n, b, c) + " " + e.what());
          ++got;
          continue;
        }
        bool all_defined = true;
        for (const auto& e : rep.entries) {
          if (!e.c_closed || !e.theta) all_defined = false;
        }
        if (!all_defined) continue;
        ++got;
        const auto fails = rep.failures();
        record(r, fails.empty(), fails.empty() ? "" : fails.front());
      }
      if (got < per_region) {
        record(r, false, "could not sample " + region + " for n=" +
                             std::to_string(n));
      }
    }
  }
  return finish(r);
}

CheckResult check_theta(const VerifyOptions& opt) {
  CheckResult r{4, "theta closed forms equal the recurrence"};
  Sampler s(4);
  const int draws = full(opt) ? 50 : 10;
  int got = 0;
  while (got < draws) {
    const unsigned n = s.degree(2, 12);
    const Rational b = s.rational(Rational(-15), Rational(15));
    const Rational c = s.rational(Rational(-15), Rational(15));
    if (!HypParams::violation(n, b, c).empty()) continue;
    const HypParams p{n, b, c};
    std::vector<std::pair<Rational, Rational>> pairs;
    try {
      const ThetaSequence rec = theta_by_recurrence(p);
      for (std::size_t k = 1; k < n; ++k) {
        pairs.emplace_back(rec.at(k), theta_closed_form(k, p));
      }
    } catch (const Error&) {
      continue;  // a guarded denominator vanished; draw again
    }
    ++got;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      record(r, pairs[k].first == pairs[k].second,
             point(n, b, c) + " k=" + std::to_string(k + 1) + " recurrence=" +
                 pairs[k].first.str() + " closed=" + pairs[k].second.str());
    }
  }
  return finish(r);
}

CheckResult check_pfaff(const VerifyOptions& opt) {
  CheckResult r{5, "Pfaff transformation is an exact identity"};
  Sampler s(5);
  const int draws = full(opt) ? 50 : 10;
  int got = 0;
  while (got < draws) {
    const unsigned n = s.degree(1, 10);
    const Rational b = s.rational(Rational(-15), Rational(15));
    const Rational c = s.rational(Rational(-15), Rational(15));
    if (!HypParams::violation(n, b, c).empty()) continue;
    const PfaffSides sides = pfaff_sides(HypParams{n, b, c});
    ++got;
    record(r, sides.direct == sides.transformed, point(n, b, c));
  }
  return finish(r);
}

CheckResult check_jacobi(const VerifyOptions& opt) {
  CheckResult r{6, "Jacobi representations are exact identities"};
  Sampler s(6);
  const int draws = full(opt) ? 20 : 5;
  for (auto rep : {JacobiRep::ShiftedArgument, JacobiRep::InverseArgument,
                   JacobiRep::MobiusArgument}) {
    int got = 0;
    while (got < draws) {
      const JacobiParams j{s.degree(1, 8), s.rational(Rational(-8), Rational(8)),
                           s.rational(Rational(-8), Rational(8))};
      RatPoly rhs;
      try {
        rhs = jacobi_representation_rhs(rep, j);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidParams) continue;
        throw;
      }
      ++got;
      record(r, rhs == jacobi_reference(j),
             to_string(rep) + " n=" + std::to_string(j.n) + " alpha=" +
                 j.alpha.str() + " beta=" + j.beta.str());
    }
  }
  return finish(r);
}

namespace {

std::string counts(const ZeroReport& z) {
  std::ostringstream os;
  os << "(neg " << z.neg << ", unit " << z.unit << ", tail " << z.tail
     << ", nonreal " << z.nonreal << ")";
  return os.str();
}

}  // namespace

CheckResult check_censuses(const VerifyOptions& opt) {
  CheckResult r{7, "numeric census equals predicted census"};
  Sampler s(7);
  const int per_case = full(opt) ? 10 : 3;

  // Group the hypotheses by family and case, independent of n.
  std::vector<std::pair<std::string, std::string>> cases;
  for (const auto& h : census_hypotheses(6)) {
    const auto key = std::make_pair(h.source, h.case_name);
    if (std::find(cases.begin(), cases.end(), key) == cases.end()) {
      cases.push_back(key);
    }
  }

  for (const auto& [source, case_name] : cases) {
    int got = 0;
    for (int attempt = 0; got < per_case && attempt < 1000000; ++attempt) {
      const unsigned n = s.degree(4, 10);
      const Rational L(static_cast<long>(2 * n + 6));
      const Rational c = s.rational(-L, L);
      const Rational b = s.rational(-L, L);
      if (!HypParams::violation(n, b, c).empty()) continue;
      const Hypothesis* hyp = nullptr;
      const auto hyps = census_hypotheses(n);
      for (const auto& h : hyps) {
        if (h.source == source && h.case_name == case_name &&
            locate(h.cell, c, b) == Membership::Inside) {
          hyp = &h;
        }
      }
      if (!hyp) continue;
      if (!clear_of_lines(all_boundary_lines(n), c, b, kMargin)) continue;
      ++got;
      const HypParams p{n, b, c};
      const std::string where = hyp->tag() + " " + point(n, b, c);
      try {
        const auto predicted = predict_counts(p);
        const ZeroReport numeric = census(find_roots(build_2f1(p)));
        const bool ok = predicted && predicted->same_counts(numeric) &&
                        hyp->counts.same_counts(numeric);
        record(r, ok,
               where + " predicted " +
                   (predicted ? counts(*predicted) : std::string("none")) +
                   " numeric " + counts(numeric));
        if (hyp->all_real_simple) {
          const auto t = build_sequence(build_2f1(p));
          record(r, t.classification == ZeroNature::AllRealSimple,
                 where + " division sequence disagrees");
        }
        if (source == "quasi-orthogonal-1-beta" && case_name == "ii") {
          r.notes.push_back("printed-strip point " + point(n, b, c) +
                            " numeric " + counts(numeric) +
                            (ok ? " confirms" : " contradicts"));
        }
      } catch (const Error& e) {
        record(r, false, where + " " + e.what());
      }
    }
    if (got < per_case) {
      record(r, false, "could not sample " + source + " (" + case_name + ")");
    }
  }

  // Audit of the wider strip c in (b-n-1, b-n+1) next to the printed one.
  int audited = 0, confirmed = 0;
  for (int attempt = 0; audited < per_case && attempt < 1000000; ++attempt) {
    const unsigned n = s.degree(4, 10);
    const Rational nn(static_cast<long>(n));
    const Rational b = s.rational(Rational(1) - nn, Rational(2) - nn);
    const Rational c = s.rational(b - nn - Rational(1), b - nn + Rational(1));
    if (!(b > Rational(1) - nn && b < Rational(2) - nn)) continue;
    if (!(c > b - nn - Rational(1) && c < b - nn + Rational(1))) continue;
    if (!HypParams::violation(n, b, c).empty()) continue;
    if (!clear_of_lines(all_boundary_lines(n), c, b, kMargin)) continue;
    ++audited;
    try {
      const ZeroReport z = census(find_roots(build_2f1(HypParams{n, b, c})));
      if (z.neg == 1 && z.tail == static_cast<int>(n) - 1) ++confirmed;
    } catch (const Error&) {
    }
  }
  r.notes.push_back("wider strip c in (b-n-1, b-n+1): " +
                    std::to_string(confirmed) + "/" + std::to_string(audited) +
                    " points show n-1 zeros in (1,inf) and one negative");
  return finish(r);
}

CheckResult check_degenerate_branch(const VerifyOptions&) {
  CheckResult r{8, "z^k (z-1) takes the zero-remainder branch"};
  for (unsigned k = 2; k <= 4; ++k) {
    const RatPoly f = RatPoly::monomial(Rational(1), k + 1) -
                      RatPoly::monomial(Rational(1), k);
    const SequenceTrace t = run_sequence(f);
    bool branch_with_zero = false;
    for (const auto& step : t.steps) {
      if (step.took_derivative_branch && step.c && step.c->is_zero()) {
        branch_with_zero = true;
      }
    }
    record(r,
           branch_with_zero &&
               t.classification == ZeroNature::AllRealWithMultiple &&
               t.c_values().size() == k,
           "k=" + std::to_string(k));
  }
  return finish(r);
}

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  return {
      check_real_simple_regions(opt), check_small_degree(opt),
      check_closed_forms(opt),        check_theta(opt),
      check_pfaff(opt),               check_jacobi(opt),
      check_censuses(opt),            check_degenerate_branch(opt),
  };
}

}  // namespace hypzeros
