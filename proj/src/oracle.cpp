#include "hypzeros/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hypzeros/error.hpp"

namespace hypzeros {

namespace {

using cld = std::complex<long double>;

struct Eval {
  cld value;
  cld slope;
  long double magnitude;  // sum |a_i| |z|^i
};

Eval horner(const std::vector<long double>& a, cld z) {
  cld v = 0, d = 0;
  long double m = 0;
  const long double r = std::abs(z);
  for (std::size_t i = a.size(); i-- > 0;) {
    d = d * z + v;
    v = v * z + a[i];
    m = m * r + std::fabs(a[i]);
  }
  return {v, d, m};
}

std::vector<long double> scaled_coefficients(const RatPoly& p) {
  Rational biggest;
  for (const auto& c : p.coefficients()) biggest = std::max(biggest, c.abs());
  std::vector<long double> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    const long double v = (c / biggest).to_long_double();
    if (!std::isfinite(v) || (v == 0.0L && !c.is_zero())) {
      throw Error(ErrorKind::ConversionOverflow,
                  "coefficient " + c.str() + " does not fit a long double "
                  "after scaling");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

RootSet find_roots(const RatPoly& p, const OracleTolerances& tol) {
  if (p.is_zero() || p.degree() < 1) {
    throw Error(ErrorKind::DegreeOrder, "root finding needs degree >= 1");
  }
  const std::vector<long double> a = scaled_coefficients(p);
  const std::size_t n = a.size() - 1;

  // Start on a circle around the centroid whose radius bounds the roots.
  const cld center = -a[n - 1] / (static_cast<long double>(n) * a[n]);
  long double radius = 0;
  for (std::size_t i = 0; i < n; ++i) {
    radius = std::max(radius,
                      std::pow(std::fabs(a[i] / a[n]), 1.0L / (n - i)));
  }
  radius = std::max(radius, 1e-3L);
  std::vector<cld> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long double angle =
        2 * std::numbers::pi_v<long double> * i / n + 0.4L;
    z[i] = center + std::polar(radius, angle);
  }

  const long double eps = std::numeric_limits<long double>::epsilon();
  std::vector<bool> done(n, false);
  int iter = 0;
  for (; iter < tol.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Eval e = horner(a, z[i]);
      if (std::abs(e.value) <= 4 * eps * e.magnitude) {
        done[i] = true;
        continue;
      }
      all_done = false;
      if (e.slope == cld(0)) {
        z[i] += radius * eps * 1024;
        continue;
      }
      const cld ratio = e.value / e.slope;
      cld repel = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) repel += 1.0L / (z[i] - z[j]);
      }
      const cld step = ratio / (1.0L - ratio * repel);
      z[i] -= step;
      if (std::abs(step) <= 4 * eps * std::abs(z[i])) done[i] = true;
    }
    if (all_done) break;
  }

  RootSet out;
  out.tolerances = tol;
  std::sort(z.begin(), z.end(), [](const cld& x, const cld& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  double worst = 0;
  for (const auto& r : z) {
    const Eval e = horner(a, r);
    const double res = static_cast<double>(std::abs(e.value) / e.magnitude);
    worst = std::max(worst, res);
    out.roots.emplace_back(static_cast<double>(r.real()),
                           static_cast<double>(r.imag()));
    out.residuals.push_back(res);
  }
  if (iter == tol.max_iterations || !(worst <= tol.residual)) {
    std::ostringstream os;
    os << "after " << iter << " iterations the worst relative residual is "
       << worst;
    throw Error(ErrorKind::NoConvergence, os.str());
  }
  return out;
}

ZeroReport census(const RootSet& r) {
  ZeroReport rep;
  rep.source = CountSource::Numeric;
  rep.tag = "numeric";
  std::vector<std::string> ambiguous;
  for (const auto& z : r.roots) {
    if (std::fabs(z.imag()) >= r.tolerances.tol_real) {
      ++rep.nonreal;
      continue;
    }
    const double x = z.real();
    if (std::fabs(x) < r.tolerances.tol_bnd ||
        std::fabs(x - 1.0) < r.tolerances.tol_bnd) {
      std::ostringstream os;
      os.precision(17);
      os << x;
      ambiguous.push_back(os.str());
      continue;
    }
    if (x < 0) {
      ++rep.neg;
    } else if (x < 1) {
      ++rep.unit;
    } else {
      ++rep.tail;
    }
  }
  if (!ambiguous.empty()) {
    std::string list;
    for (const auto& s : ambiguous) list += (list.empty() ? "" : ", ") + s;
    throw Error(ErrorKind::BoundaryAmbiguity,
                "real zeros at an interval endpoint: " + list);
  }
  return rep;
}

double min_gap(const RootSet& r) {
  std::vector<double> xs;
  for (const auto& z : r.roots) {
    if (std::fabs(z.imag()) >= r.tolerances.tol_real) {
      throw Error(ErrorKind::NotAllReal, "non-real zero present");
    }
    xs.push_back(z.real());
  }
  std::sort(xs.begin(), xs.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < xs.size(); ++i) gap = std::min(gap, xs[i] - xs[i - 1]);
  return gap;
}

bool numerically_real_simple(const RootSet& r) {
  const bool all_real =
      std::all_of(r.roots.begin(), r.roots.end(), [&](const auto& z) {
        return std::fabs(z.imag()) < r.tolerances.tol_real;
      });
  return all_real && min_gap(r) > r.tolerances.tol_gap;
}

}  // namespace hypzeros
