#include "polylab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "double_double.hpp"
#include "polylab/error.hpp"

namespace polylab {

namespace {

using detail::ComplexDD;
using detail::DoubleDouble;

std::vector<double> to_double(const IntPoly& f) {
  std::vector<double> a;
  a.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) a.push_back(c.convert_to<double>());
  return a;
}

// Newton ratio f(z)/f'(z). For |z| > 1 the reversed polynomial is used so
// high degrees do not overflow: f/f' = z g(w) / (n g(w) - w g'(w)), w = 1/z.
Complex newton_ratio(const std::vector<double>& a, Complex z) {
  const std::size_t n = a.size() - 1;
  if (std::abs(z) <= 1.0) {
    Complex p = a[n];
    Complex dp = 0.0;
    for (std::size_t i = n; i-- > 0;) {
      dp = dp * z + p;
      p = p * z + a[i];
    }
    if (dp == Complex(0.0)) return p;
    return p / dp;
  }
  const Complex w = 1.0 / z;
  Complex g = a[0];
  Complex dg = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    dg = dg * w + g;
    g = g * w + a[i];
  }
  const Complex den = static_cast<double>(n) * g - w * dg;
  if (den == Complex(0.0)) return z * g;
  return z * g / den;
}

double backward_error(const std::vector<double>& a, Complex z) {
  const double r = std::abs(z);
  Complex p = 0.0;
  double scale = 0.0;
  if (r <= 1.0) {
    for (std::size_t i = a.size(); i-- > 0;) {
      p = p * z + a[i];
      scale = scale * r + std::abs(a[i]);
    }
  } else {
    const Complex w = 1.0 / z;
    const double rw = 1.0 / r;
    for (std::size_t i = 0; i < a.size(); ++i) {
      p = p * w + a[i];
      scale = scale * rw + std::abs(a[i]);
    }
  }
  return scale == 0.0 ? 0.0 : std::abs(p) / scale;
}

DoubleDouble to_dd(const BigInt& c) {
  const double hi = c.convert_to<double>();
  const BigInt rest = c - BigInt(hi);
  return {hi, rest.convert_to<double>()};
}

}  // namespace

RootSet find_roots(const IntPoly& f, const RootOptions& options) {
  if (f.is_zero()) throw InvalidArgument("cannot find roots of the zero polynomial");
  if (f.degree() < 1) throw InvalidArgument("root finding needs degree >= 1");

  // Exact zero roots: divide out z^shift so they never reach the iteration.
  std::size_t shift = 0;
  while (f.coeff(shift) == 0) ++shift;
  if (shift > 0) {
    RootSet out;
    out.converged = true;
    if (static_cast<int>(shift) < f.degree()) {
      out = find_roots(IntPoly(std::vector<BigInt>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(shift),
                                                   f.coeffs().end())),
                       options);
    }
    out.roots.insert(out.roots.begin(), shift, Complex(0.0));
    out.residuals.insert(out.residuals.begin(), shift, 0.0);
    return out;
  }

  std::vector<double> a = to_double(f);
  const double lead = a.back();
  for (auto& c : a) c /= lead;
  const std::size_t n = a.size() - 1;

  double bound = 0.0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(a[i]));
  bound += 1.0;

  RootSet out;
  out.roots.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n) + 0.7;
    out.roots[j] = std::polar(bound, theta);
  }

  std::vector<bool> done(n, false);
  std::vector<double> history;
  bool stagnated = false;
  int sweep = 0;
  for (; sweep < options.max_sweeps; ++sweep) {
    double max_corr = 0.0;
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      Complex& z = out.roots[i];
      const Complex ratio = newton_ratio(a, z);
      Complex sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const Complex d = z - out.roots[j];
        if (d != Complex(0.0)) sum += 1.0 / d;
      }
      Complex corr = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) corr = ratio;
      z -= corr;
      const double rel = std::abs(corr) / std::max(1.0, std::abs(z));
      max_corr = std::max(max_corr, rel);
      if (rel < options.tolerance) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    history.push_back(max_corr);
    if (all_done) {
      ++sweep;
      break;
    }
    // Repeated roots stall at roughly eps^(1/multiplicity); accept once no
    // progress has been made for a while below the relaxed tolerance.
    const std::size_t h = history.size();
    if (h > 30 && max_corr < options.relaxed_tolerance && max_corr > 0.1 * history[h - 11]) {
      stagnated = true;
      ++sweep;
      break;
    }
  }
  out.sweeps = sweep;

  out.residuals.resize(n);
  bool residuals_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    out.residuals[i] = backward_error(a, out.roots[i]);
    if (!(out.residuals[i] <= options.residual_threshold)) residuals_ok = false;
  }
  const bool strict = std::all_of(done.begin(), done.end(), [](bool b) { return b; });
  out.clustered = stagnated;
  for (std::size_t i = 0; i < n && !out.clustered; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(out.roots[i] - out.roots[j]) < 1e-5 * std::max(1.0, std::abs(out.roots[i]))) {
        out.clustered = true;
        break;
      }
  out.converged = residuals_ok && (strict || stagnated);
  return out;
}

RootSet refine_roots(const IntPoly& f, RootSet roots, const RootOptions& options) {
  std::vector<DoubleDouble> a;
  for (const auto& c : f.coeffs()) a.push_back(to_dd(c));
  const std::size_t n = a.size() - 1;
  std::vector<double> ad = to_double(f);

  for (auto& root : roots.roots) {
    ComplexDD z{DoubleDouble(root.real()), DoubleDouble(root.imag())};
    for (int step = 0; step < 30; ++step) {
      ComplexDD p{a[n], DoubleDouble(0.0)};
      ComplexDD dp{DoubleDouble(0.0), DoubleDouble(0.0)};
      for (std::size_t i = n; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + ComplexDD{a[i], DoubleDouble(0.0)};
      }
      if (dp.re.hi == 0.0 && dp.im.hi == 0.0) break;
      if (p.re.hi == 0.0 && p.im.hi == 0.0) break;
      z = z - p / dp;
    }
    root = Complex(z.re.value(), z.im.value());
  }
  bool ok = true;
  for (std::size_t i = 0; i < roots.roots.size(); ++i) {
    roots.residuals[i] = backward_error(ad, roots.roots[i]);
    if (!(roots.residuals[i] <= options.residual_threshold)) ok = false;
  }
  roots.converged = ok;
  return roots;
}

std::optional<double> max_root_modulus(const IntPoly& f) {
  RootSet rs = find_roots(f);
  if (!rs.converged) rs = refine_roots(f, std::move(rs));
  if (!rs.converged) return std::nullopt;
  double m = 0.0;
  for (const auto& z : rs.roots) m = std::max(m, std::abs(z));
  return m;
}

bool annulus_check(const IntPoly& f) {
  if (!is_pm1_poly(f)) throw InvalidArgument("annulus check needs a monic polynomial with +-1 coefficients");
  RootSet rs = find_roots(f);
  if (!rs.converged) rs = refine_roots(f, std::move(rs));
  if (!rs.converged) return false;
  return std::all_of(rs.roots.begin(), rs.roots.end(), [](Complex z) {
    const double r = std::abs(z);
    return r >= 0.5 + 1e-6 && r <= 2.0 - 1e-6;
  });
}

std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{1.0};
  for (const auto& r : roots) {
    c.push_back(0.0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  return c;
}

}  // namespace polylab
