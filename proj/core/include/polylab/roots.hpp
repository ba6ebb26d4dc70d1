#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "polylab/int_poly.hpp"

namespace polylab {

using Complex = std::complex<double>;

/// Numeric roots of an integer polynomial together with per-root backward
/// error |f(z)| / sum |a_i||z|^i.
struct RootSet {
  std::vector<Complex> roots;
  std::vector<double> residuals;
  bool converged = false;
  // Set when corrections stagnated above the strict tolerance, which is what
  // repeated or tightly clustered roots do in double precision.
  bool clustered = false;
  int sweeps = 0;
};

struct RootOptions {
  double tolerance = 1e-12;       // relative simultaneous correction
  double relaxed_tolerance = 1e-6;
  int max_sweeps = 500;
  double residual_threshold = 1e-8;
};

/// Aberth-Ehrlich iteration started on the Cauchy-bound circle.
/// Throws InvalidArgument for polynomials of degree < 1.
RootSet find_roots(const IntPoly& f, const RootOptions& options = {});

/// Thirty Newton steps per root in double-double arithmetic, then residuals
/// recomputed at that precision.
RootSet refine_roots(const IntPoly& f, RootSet roots, const RootOptions& options = {});

/// Largest root modulus, or nullopt if the root set did not converge.
std::optional<double> max_root_modulus(const IntPoly& f);

/// For monic f with every other coefficient +-1: all roots have modulus in
/// [0.5 + 1e-6, 2 - 1e-6]. Throws InvalidArgument outside that class.
bool annulus_check(const IntPoly& f);

/// Monic polynomial prod (z - r) with complex coefficients, ascending.
std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots);

}  // namespace polylab
