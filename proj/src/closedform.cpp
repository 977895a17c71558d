#include "hypzeros/closedform.hpp"

#include <array>
#include <sstream>

#include "hypzeros/error.hpp"

namespace hypzeros {

namespace {

Rational R(long v) { return Rational(v); }

}  // namespace

Rational alpha(long k, unsigned l, const HypParams& p) {
  const Rational n(static_cast<long>(p.n));
  const Rational& b = p.b;
  const Rational& c = p.c;
  const Rational kk(k);
  const std::array<Rational, 3> top = {
      (kk - n) / R(2),
      (R(2) * kk - n - b - R(3)) / R(4),
      (kk - b - R(1) + c) / R(2),
  };
  const std::array<Rational, 3> bottom = {
      (kk - b - R(2)) / R(2),
      (R(2) * kk - b - R(1) - n) / R(4),
      (kk - n - R(1) - c) / R(2),
  };
  static constexpr std::array<const char*, 3> kBottomNames = {
      "((k-b-2)/2)_l", "((2k-b-1-n)/4)_l", "((k-n-1-c)/2)_l"};
  Rational num(1);
  Rational den(1);
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational d = pochhammer(bottom[i], l);
    if (d.is_zero()) {
      throw Error(ErrorKind::DenominatorVanishes,
                  std::string(kBottomNames[i]) + " vanishes at k=" +
                      std::to_string(k) + ", l=" + std::to_string(l));
    }
    den *= d;
    num *= pochhammer(top[i], l);
  }
  return num / den;
}

namespace {

void require_seeds(const HypParams& p) {
  if (p.c.is_zero()) throw Error(ErrorKind::SeedUndefined, "c = 0");
  if ((p.b + R(static_cast<long>(p.n)) - R(1)).is_zero()) {
    throw Error(ErrorKind::SeedUndefined, "b + n - 1 = 0");
  }
}

}  // namespace

ThetaSequence theta_by_recurrence(const HypParams& p) {
  require_seeds(p);
  const Rational n(static_cast<long>(p.n));
  ThetaSequence out{{}, p};
  if (p.n < 2) return out;
  out.values.push_back(-n * p.b / p.c);
  if (p.n >= 3) {
    out.values.push_back((p.b - p.c) * (n - R(1)) /
                         (p.c * (p.b + n - R(1))));
  }
  for (long k = 2; k + 2 <= static_cast<long>(p.n); ++k) {
    // theta_{k+1} = alpha_{k,1} theta_{k-1}
    out.values.push_back(alpha(k, 1, p) * out.values[k - 2]);
  }
  return out;
}

Rational theta_closed_form(std::size_t k, const HypParams& p) {
  const std::size_t n = p.n;
  const Rational nn(static_cast<long>(n));
  if (k == 0 || k >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "theta index " + std::to_string(k) + " outside 1..n-1");
  }
  if (p.c.is_zero()) throw Error(ErrorKind::DenominatorVanishes, "c = 0");
  if (k % 2 == 0) {
    const std::size_t half = k / 2;
    if (half > (n - 1) / 2) {
      throw Error(ErrorKind::IndexOutOfRange, "even theta index too large");
    }
    const Rational den = p.c * (nn + p.b + R(1));
    if (den.is_zero()) {
      throw Error(ErrorKind::DenominatorVanishes, "n + b + 1 = 0");
    }
    return (p.b + R(1)) * (nn + p.c) / den *
           alpha(1, static_cast<unsigned>(half), p);
  }
  const std::size_t half = (k - 1) / 2;
  if (n < 2 || half > (n - 2) / 2) {
    throw Error(ErrorKind::IndexOutOfRange, "odd theta index too large");
  }
  return -nn * p.b / p.c * alpha(2, static_cast<unsigned>(half), p);
}

Rational c_closed_form(std::size_t k, const HypParams& p,
                       std::optional<FactorFlip> flip) {
  if (k == 0 || k >= p.n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "c index " + std::to_string(k) + " outside 1..n-1");
  }
  const Rational n(static_cast<long>(p.n));
  const Rational& b = p.b;
  const Rational& c = p.c;
  if (k == 1) {
    const Rational den = (n + b - R(2)) * (n + b - R(1)) * (n + b - R(1));
    if (den.is_zero()) {
      throw Error(ErrorKind::DenominatorVanishes,
                  "(n+b-2)(n+b-1)^2 vanishes for k=1");
    }
    return (n - R(1)) * (n + c - R(1)) * (b - c) / den;
  }
  const Rational kk(static_cast<long>(k));
  std::array<Rational, kCkFactorCount> f = {
      n - kk,
      n + c - kk,
      b + R(1) - kk,
      b - c + R(1) - kk,
      n + b + R(2) - R(2) * kk,
      n + b - R(2) * kk,
      n + b + R(1) - R(2) * kk,
      n + b + R(1) - R(2) * kk,
  };
  if (flip && flip->index < f.size()) f[flip->index] = -f[flip->index];
  const Rational den = f[4] * f[5] * f[6] * f[7];
  if (den.is_zero()) {
    throw Error(ErrorKind::DenominatorVanishes,
                "denominator vanishes for k=" + std::to_string(k));
  }
  return f[0] * f[1] * f[2] * f[3] / den;
}

bool CrosscheckReport::passed() const {
  for (const auto& e : entries) {
    if (!e.c_ok || !e.proportionality_ok) return false;
  }
  return true;
}

std::vector<std::string> CrosscheckReport::failures() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (e.c_ok && e.proportionality_ok) continue;
    std::ostringstream os;
    os << "n=" << params.n << " b=" << params.b << " c=" << params.c
       << " k=" << e.k << " c_trace=" << e.c_trace << " c_closed="
       << (e.c_closed ? e.c_closed->str() : "undefined")
       << (e.proportionality_ok ? "" : " f_k not proportional");
    out.push_back(os.str());
  }
  return out;
}

CrosscheckReport crosscheck(const HypParams& p,
                            std::optional<FactorFlip> flip) {
  if (p.n < 2) {
    throw Error(ErrorKind::DegreeTooSmall, "crosscheck needs n >= 2");
  }
  const SequenceTrace trace = build_sequence(build_2f1(p));
  const auto cs = trace.c_values();
  if (cs.size() + 1 != p.n) {
    throw Error(ErrorKind::TraceDegenerate,
                "trace produced " + std::to_string(cs.size()) +
                    " values instead of n-1");
  }
  for (const auto& s : trace.steps) {
    if (s.took_derivative_branch && s.k + 1 < p.n) {
      throw Error(ErrorKind::TraceDegenerate,
                  "derivative branch at step " + std::to_string(s.k));
    }
  }

  std::optional<ThetaSequence> thetas;
  std::string theta_note;
  try {
    thetas = theta_by_recurrence(p);
  } catch (const Error& e) {
    theta_note = e.what();
  }

  CrosscheckReport report{p, {}};
  for (std::size_t k = 1; k < p.n; ++k) {
    CrosscheckEntry e;
    e.k = k;
    e.c_trace = cs[k - 1];
    try {
      e.c_closed = c_closed_form(k, p, flip);
      e.c_ok = *e.c_closed == e.c_trace;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::DenominatorVanishes) throw;
      e.c_ok = true;
      e.note = "undefined closed form";
    }
    if (thetas) {
      e.theta = thetas->at(k);
      e.proportionality_ok =
          trace.steps[k].f == expected_step_shape(p, k) * *e.theta;
    } else {
      e.proportionality_ok = true;
      if (!e.note.empty()) e.note += "; ";
      e.note += "theta undefined (" + theta_note + ")";
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace hypzeros
