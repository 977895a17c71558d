#pragma once

#include <complex>
#include <vector>

#include "hypzeros/ratpoly.hpp"
#include "hypzeros/regions.hpp"

namespace hypzeros {

struct OracleTolerances {
  double tol_real = 1e-8;   // |Im z| below this counts as real
  double tol_bnd = 1e-9;    // real zeros this close to 0 or 1 are ambiguous
  double tol_gap = 1e-9;    // minimum separation for "simple"
  double residual = 1e-10;  // relative backward error bound per root
  int max_iterations = 2000;
};

struct RootSet {
  std::vector<std::complex<double>> roots;  // sorted by real, then imaginary
  std::vector<double> residuals;            // |p(z)| / sum |a_i| |z|^i
  OracleTolerances tolerances;
};

/// All deg(p) complex zeros by Aberth-Ehrlich simultaneous iteration in long
/// double on the coefficient vector scaled to unit max-norm. Throws
/// ConversionOverflow when a scaled coefficient leaves the long double range
/// and NoConvergence when the iteration cap or residual bound is missed.
RootSet find_roots(const RatPoly& p, const OracleTolerances& tol = {});

/// Buckets zeros into (-inf,0), (0,1), (1,inf) and non-real. Throws
/// BoundaryAmbiguity for real zeros within tol_bnd of 0 or 1.
ZeroReport census(const RootSet& r);

/// Smallest distance between real parts. Throws NotAllReal.
double min_gap(const RootSet& r);

/// Numeric verdict on "all real and simple".
bool numerically_real_simple(const RootSet& r);

}  // namespace hypzeros
