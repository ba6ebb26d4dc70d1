#include "polylab/factor_search.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "polylab/cyclotomic.hpp"
#include "polylab/error.hpp"
#include "polylab/number_theory.hpp"
#include "polylab/roots.hpp"

namespace polylab {

std::string to_string(FactorMethod m) {
  switch (m) {
    case FactorMethod::Enumerate: return "enumerate";
    case FactorMethod::Subset: return "subset";
    case FactorMethod::Cyclotomic: return "cyclotomic";
    case FactorMethod::RationalRoot: return "rational-root";
  }
  return "?";
}

std::string to_string(FactorStatus s) {
  switch (s) {
    case FactorStatus::Irreducible: return "Irreducible";
    case FactorStatus::Reducible: return "Reducible";
    case FactorStatus::NoFactorUpTo: return "NoFactorUpTo";
    case FactorStatus::Unknown: return "Unknown";
  }
  return "?";
}

std::vector<IntPoly> FactorReport::factor_polys() const {
  std::vector<IntPoly> out;
  for (const auto& f : factors) out.push_back(f.poly);
  return out;
}

namespace {

void require_monic(const IntPoly& f) {
  if (f.degree() < 1 || !f.is_monic()) throw InvalidArgument("expected a monic polynomial of degree >= 1");
}

// A divisor found in ascending degree order is irreducible iff no smaller
// irreducible factor already found divides it.
bool is_new_irreducible(const IntPoly& g, const std::vector<FoundFactor>& found) {
  for (const auto& h : found) {
    if (h.poly == g) return false;
    if (h.degree() < g.degree() && poly_divides(h.poly, g)) return false;
  }
  return true;
}

void sort_factors(std::vector<FoundFactor>& v) {
  std::sort(v.begin(), v.end(), [](const FoundFactor& a, const FoundFactor& b) { return a.poly < b.poly; });
}

FactorReport finish_low_degree(const IntPoly& f, int k, std::vector<FoundFactor> found) {
  sort_factors(found);
  FactorReport r;
  r.k = k;
  if (found.empty()) {
    r.status = FactorStatus::NoFactorUpTo;
  } else if (found.size() == 1 && found.front().poly == f) {
    r.status = FactorStatus::Irreducible;
    r.certificate = "self";
  } else {
    r.status = FactorStatus::Reducible;
  }
  r.factors = std::move(found);
  return r;
}

// Valid upper bound on every root modulus of a monic polynomial, usually far
// tighter than the Cauchy bound: 2 max(|a_{n-i}|^(1/i), |a_0/2|^(1/n)).
double fujiwara_bound(const IntPoly& f) {
  const int n = f.degree();
  double b = 0.0;
  for (int i = 1; i <= n; ++i) {
    double c = std::abs(f.coeff(static_cast<std::size_t>(n - i)).convert_to<double>());
    if (i == n) c /= 2.0;
    if (c > 0) b = std::max(b, std::pow(c, 1.0 / i));
  }
  return 2.0 * b * (1.0 + 1e-9) + 1e-9;
}

}  // namespace

std::vector<IntPoly> rational_root_factors(const IntPoly& f) {
  require_monic(f);
  std::vector<BigInt> roots;
  // Strip the power of z first so the trailing coefficient is nonzero.
  std::size_t shift = 0;
  while (f.coeff(shift) == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  const BigInt& c0 = f.coeff(shift);
  if (static_cast<int>(shift) < f.degree()) {
    IntPoly g(std::vector<BigInt>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), f.coeffs().end()));
    const double bound = fujiwara_bound(g);
    const BigInt abs_c0 = abs(c0);
    BigInt limit = std::min(abs_c0, BigInt(static_cast<long long>(std::floor(std::min(bound, 9e18)))));
    for (BigInt r = 1; r <= limit; ++r) {
      if (abs_c0 % r != 0) continue;
      if (poly_eval_int(g, -r) == 0) roots.push_back(-r);
      if (poly_eval_int(g, r) == 0) roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<IntPoly> out;
  for (const auto& r : roots) out.push_back(IntPoly::linear(r));
  return out;
}

FactorReport low_degree_factors_enumerate(const IntPoly& f, int k, const std::optional<BigRational>& M,
                                          const BigInt& ceiling) {
  require_monic(f);
  if (k < 1) throw InvalidArgument("factor degree k must be >= 1");
  const BigRational bound = M ? *M : cauchy_root_bound(f);
  const int kmax = std::min(k, f.degree());
  const BigInt& f0 = f.coeff(0);

  std::vector<CandidateStream> streams;
  BigInt total = 0;
  for (int d = 1; d <= kmax; ++d) {
    CandidateBox box = CandidateBox::make(d, bound);
    std::optional<std::vector<BigInt>> c0s;
    if (f0 != 0) {
      // h(0) | f(0) for any monic integer factor h.
      std::vector<BigInt> allowed;
      const BigInt& b = box.coefficient_bound(0);
      const BigInt abs_f0 = abs(f0);
      for (BigInt c = 1; c <= b && c <= abs_f0; ++c) {
        if (abs_f0 % c == 0) {
          allowed.push_back(-c);
          allowed.push_back(c);
        }
      }
      std::sort(allowed.begin(), allowed.end());
      c0s = std::move(allowed);
    }
    streams.emplace_back(std::move(box), std::move(c0s));
    total += streams.back().predicted_count();
  }
  if (total > ceiling) throw CeilingExceeded(total, ceiling);

  std::vector<FoundFactor> found;
  for (auto& stream : streams) {
    while (auto h = stream.next()) {
      if (poly_divides(*h, f) && is_new_irreducible(*h, found)) found.push_back({std::move(*h), FactorMethod::Enumerate});
    }
  }
  return finish_low_degree(f, k, std::move(found));
}

namespace {

struct SubsetSearch {
  const IntPoly& f;
  const std::vector<Complex>& roots;
  const SubsetOptions& options;
  std::vector<FoundFactor>& found;
  std::uint64_t visited = 0;
  bool stop_at_first = false;
  bool budget_exhausted = false;

  // partial[m] = prod over the first m chosen roots of (z - r), ascending.
  std::vector<std::vector<Complex>> partial = {};

  void leaf(const std::vector<Complex>& c) {
    const std::size_t d = c.size() - 1;
    std::vector<BigInt> coeffs(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
      const double re = c[i].real();
      const double rounded = std::nearbyint(re);
      if (std::abs(c[i].imag()) > options.window || std::abs(re - rounded) > options.window) return;
      if (std::abs(rounded) > 9e18) return;
      coeffs[i] = static_cast<long long>(rounded);
    }
    coeffs[d] = 1;
    const BigInt& f0 = f.coeff(0);
    if (f0 != 0 && (coeffs[0] == 0 || f0 % coeffs[0] != 0)) return;
    IntPoly g(std::move(coeffs));
    if (!is_new_irreducible(g, found)) return;
    if (poly_divides(g, f)) found.push_back({std::move(g), FactorMethod::Subset});
  }

  // Choose `remaining` more roots from indices >= start.
  void dfs(std::size_t start, std::size_t depth, std::size_t target) {
    if (budget_exhausted || (stop_at_first && !found.empty())) return;
    if (depth == target) {
      if (++visited > options.max_subsets) {
        budget_exhausted = true;
        return;
      }
      leaf(partial[depth]);
      return;
    }
    const std::size_t n = roots.size();
    for (std::size_t i = start; i + (target - depth) <= n; ++i) {
      const auto& prev = partial[depth];
      auto& next = partial[depth + 1];
      next.assign(prev.size() + 1, Complex(0.0));
      for (std::size_t j = 0; j < prev.size(); ++j) {
        next[j + 1] += prev[j];
        next[j] -= roots[i] * prev[j];
      }
      dfs(i + 1, depth + 1, target);
      if (budget_exhausted || (stop_at_first && !found.empty())) return;
    }
  }

  // Returns false when the budget ran out.
  bool run(int min_degree, int max_degree) {
    partial.assign(static_cast<std::size_t>(max_degree) + 1, {});
    partial[0] = {Complex(1.0)};
    for (int d = min_degree; d <= max_degree; ++d) {
      dfs(0, 0, static_cast<std::size_t>(d));
      if (budget_exhausted) return false;
      if (stop_at_first && !found.empty()) return true;
    }
    return true;
  }
};

// Numeric roots with one double-double refinement tier; nullopt means the
// factor search must answer Unknown.
std::optional<RootSet> reliable_roots(const IntPoly& f) {
  RootSet rs = find_roots(f);
  if (!rs.converged || rs.clustered) {
    const bool clustered = rs.clustered;
    rs = refine_roots(f, std::move(rs));
    rs.clustered = clustered;
  }
  if (!rs.converged) return std::nullopt;
  return rs;
}

}  // namespace

FactorReport low_degree_factors_subset(const IntPoly& f, int k, const SubsetOptions& options, int min_degree) {
  require_monic(f);
  if (k < 1) throw InvalidArgument("factor degree k must be >= 1");
  const int kmax = std::min(k, f.degree());
  auto rs = reliable_roots(f);
  if (!rs) {
    FactorReport r;
    r.k = k;
    r.certificate = "roots did not converge";
    return r;
  }
  std::vector<FoundFactor> found;
  SubsetSearch search{f, rs->roots, options, found};
  if (!search.run(std::max(1, min_degree), kmax)) {
    FactorReport r;
    r.k = k;
    r.certificate = "subset budget exhausted";
    sort_factors(found);
    r.factors = std::move(found);
    return r;
  }
  return finish_low_degree(f, k, std::move(found));
}

FactorReport low_degree_factors(const IntPoly& f, int k, const SubsetOptions& options) {
  require_monic(f);
  if (k < 1) throw InvalidArgument("factor degree k must be >= 1");
  std::vector<FoundFactor> found;
  IntPoly rest = f;
  auto strip = [&rest](const IntPoly& h) {
    while (rest.degree() >= h.degree()) {
      DivMod qr = poly_divmod_monic(rest, h);
      if (!qr.remainder.is_zero()) break;
      rest = std::move(qr.quotient);
    }
  };
  for (auto& lin : rational_root_factors(f)) {
    strip(lin);
    found.push_back({std::move(lin), FactorMethod::RationalRoot});
  }
  if (k >= 2 && rest.degree() >= 2) {
    for (auto& c : cyclotomic_factors(rest, k)) {
      if (c.poly.degree() < 2) continue;
      strip(c.poly);
      found.push_back({std::move(c.poly), FactorMethod::Cyclotomic});
    }
  }
  if (k >= 2 && rest.degree() >= 2) {
    FactorReport sub = low_degree_factors_subset(rest, k, options, 2);
    for (auto& g : sub.factors) found.push_back(std::move(g));
    if (sub.status == FactorStatus::Unknown) {
      sort_factors(found);
      FactorReport r;
      r.k = k;
      r.certificate = sub.certificate;
      r.factors = std::move(found);
      return r;
    }
  }
  return finish_low_degree(f, k, std::move(found));
}

namespace {

FactorReport reducible(std::vector<FoundFactor> factors) {
  sort_factors(factors);
  FactorReport r;
  r.status = FactorStatus::Reducible;
  r.factors = std::move(factors);
  return r;
}

FactorReport irreducible(std::string certificate) {
  FactorReport r;
  r.status = FactorStatus::Irreducible;
  r.certificate = std::move(certificate);
  return r;
}

const std::vector<std::uint64_t>& prime_table() {
  static const std::vector<std::uint64_t> primes = first_primes(200);
  return primes;
}

}  // namespace

FactorReport classify_irreducibility(const IntPoly& f, const ClassifyOptions& options) {
  require_monic(f);
  const int n = f.degree();
  if (n == 1) return irreducible("degree-one");
  if (is_pm1_poly(f) && rademacher_structural_certificate(n)) return irreducible("structural");

  if (auto lin = rational_root_factors(f); !lin.empty()) {
    std::vector<FoundFactor> v;
    for (auto& p : lin) v.push_back({std::move(p), FactorMethod::RationalRoot});
    return reducible(std::move(v));
  }

  if (auto cyc = cyclotomic_factors(f, n); !cyc.empty()) {
    if (cyc.size() == 1 && cyc.front().poly == f) return irreducible("cyclotomic:" + std::to_string(cyc.front().index));
    std::vector<FoundFactor> v;
    for (auto& c : cyc) v.push_back({std::move(c.poly), FactorMethod::Cyclotomic});
    return reducible(std::move(v));
  }

  const auto& primes = prime_table();
  const std::size_t np = std::min(options.num_primes, primes.size());
  if (auto p = modp_irreducibility_certificate(f, std::span(primes.data(), np))) {
    return irreducible("mod-p:" + std::to_string(*p));
  }

  if (n / 2 < 2) return irreducible("search");  // degree 2 and 3: no integer root suffices
  auto rs = reliable_roots(f);
  if (!rs) {
    FactorReport r;
    r.certificate = "roots did not converge";
    return r;
  }
  std::vector<FoundFactor> found;
  SubsetSearch search{f, rs->roots, options.subset, found};
  search.stop_at_first = true;
  if (!search.run(2, n / 2)) {
    FactorReport r;
    r.certificate = "subset budget exhausted";
    return r;
  }
  if (!found.empty()) return reducible(std::move(found));
  return irreducible("search");
}

SmallestFactor smallest_factor_degree(const IntPoly& f, const ClassifyOptions& options) {
  FactorReport r = classify_irreducibility(f, options);
  if (r.status != FactorStatus::Reducible) return {r.status, 0};
  int smallest = f.degree();
  bool from_search = false;
  for (const auto& fac : r.factors) {
    smallest = std::min(smallest, fac.degree());
    from_search = from_search || fac.method == FactorMethod::Subset;
  }
  // Rational roots and the ascending subset search already give the minimum;
  // a cyclotomic factor may hide a smaller non-cyclotomic one.
  if (smallest <= 2 || from_search) return {FactorStatus::Reducible, smallest};
  auto rs = reliable_roots(f);
  if (!rs) return {FactorStatus::Unknown, 0};
  std::vector<FoundFactor> found;
  SubsetSearch search{f, rs->roots, options.subset, found};
  search.stop_at_first = true;
  if (!search.run(2, smallest - 1)) return {FactorStatus::Unknown, 0};
  if (!found.empty()) smallest = found.front().degree();
  return {FactorStatus::Reducible, smallest};
}

}  // namespace polylab
