#include "hypzeros/sturm.hpp"

#include <algorithm>

#include "hypzeros/error.hpp"

namespace hypzeros {

std::string to_string(ZeroNature nature) {
  switch (nature) {
    case ZeroNature::AllRealSimple: return "AllRealSimple";
    case ZeroNature::AllRealWithMultiple: return "AllRealWithMultiple";
    case ZeroNature::HasNonReal: return "HasNonReal";
  }
  return "Unknown";
}

ZeroNature zero_nature_from_string(const std::string& text) {
  for (auto z : {ZeroNature::AllRealSimple, ZeroNature::AllRealWithMultiple,
                 ZeroNature::HasNonReal}) {
    if (to_string(z) == text) return z;
  }
  throw Error(ErrorKind::Parse, "unknown zero nature '" + text + "'");
}

std::vector<Rational> SequenceTrace::c_values() const {
  std::vector<Rational> out;
  for (const auto& s : steps) {
    if (s.c) out.push_back(*s.c);
  }
  return out;
}

std::optional<ZeroNature> classify_c_values(std::size_t n,
                                            const std::vector<Rational>& c) {
  const bool any_negative =
      std::any_of(c.begin(), c.end(), [](const Rational& v) { return v.sign() < 0; });
  if (any_negative) return ZeroNature::HasNonReal;
  if (c.size() + 1 != n) return std::nullopt;
  const bool all_positive =
      std::all_of(c.begin(), c.end(), [](const Rational& v) { return v.sign() > 0; });
  return all_positive ? ZeroNature::AllRealSimple
                      : ZeroNature::AllRealWithMultiple;
}

namespace {

RatPoly unit_leading(const RatPoly& p) {
  const Rational lc = leading_coefficient(p);
  return p * (Rational(1) / lc.abs());
}

}  // namespace

SequenceTrace build_sequence(const RatPoly& f, SequenceOptions options) {
  if (f.is_zero() || f.degree() < 2) {
    throw Error(ErrorKind::DegreeTooSmall,
                "the division sequence needs degree at least 2");
  }
  SequenceTrace trace;
  trace.normalized = options.normalize;
  auto& steps = trace.steps;
  steps.push_back(StepRecord{.k = 0, .f = f});
  steps.push_back(StepRecord{
      .k = 1, .f = options.normalize ? unit_leading(derivative(f)) : derivative(f)});

  for (std::size_t k = 1; !steps[k].f.is_constant(); ++k) {
    const RatPoly& prev = steps[k - 1].f;
    const RatPoly& cur = steps[k].f;
    Division d = divide(prev, cur);
    RatPoly r = -d.remainder;
    StepRecord next{.k = k + 1};
    Rational ck;
    if (!r.is_zero()) {
      next.f = options.normalize ? unit_leading(r) : r;
      ck = leading_coefficient(r) / leading_coefficient(prev);
    } else {
      next.f = derivative(cur);
      if (options.normalize) next.f = unit_leading(next.f);
      steps[k].took_derivative_branch = true;
    }
    steps[k].quotient = std::move(d.quotient);
    steps[k].remainder = std::move(r);
    steps[k].c = options.normalize ? Rational(ck.sign()) : ck;
    steps.push_back(std::move(next));
  }
  trace.classification = classify_c_values(f.degree(), trace.c_values());
  return trace;
}

SequenceTrace run_sequence(const RatPoly& f, SequenceOptions options) {
  SequenceTrace trace = build_sequence(f, options);
  if (!trace.classification) {
    throw Error(ErrorKind::IndeterminateTrace,
                "sequence produced " + std::to_string(trace.c_values().size()) +
                    " non-negative values for degree " +
                    std::to_string(f.degree()));
  }
  return trace;
}

std::optional<Rational> proportionality(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) {
    return a.is_zero() ? std::optional<Rational>(Rational(0)) : std::nullopt;
  }
  if (a.is_zero()) return Rational(0);
  if (a.degree() != b.degree()) return std::nullopt;
  const Rational s = leading_coefficient(a) / leading_coefficient(b);
  if (b * s != a) return std::nullopt;
  return s;
}

RatPoly expected_step_shape(const HypParams& p, std::size_t k) {
  const long kk = static_cast<long>(k);
  return terminating_2f1(p.n - static_cast<unsigned>(k),
                         p.b + Rational(2 - kk), p.c + Rational(1));
}

void annotate_2f1_steps(SequenceTrace& trace, const HypParams& p) {
  for (auto& step : trace.steps) {
    if (step.k == 0 || step.k >= p.n) continue;
    step.theta = proportionality(step.f, expected_step_shape(p, step.k));
  }
}

SequenceTrace classify_2f1(const HypParams& p) {
  SequenceTrace trace = run_sequence(build_2f1(p));
  annotate_2f1_steps(trace, p);
  return trace;
}

}  // namespace hypzeros
