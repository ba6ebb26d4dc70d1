#pragma once

// Slow, obviously-correct reference implementations used to check the
// library. Nothing here shares code with polylab's own algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "polylab/int_matrix.hpp"
#include "polylab/int_poly.hpp"

namespace oracle {

using polylab::BigInt;
using polylab::BigRational;
using polylab::IntMatrix;
using polylab::IntPoly;

// Laplace expansion along the first row.
inline BigInt det_laplace(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    const BigInt term = a[0][c] * det_laplace(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

inline std::vector<std::vector<BigInt>> rows(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> out(m.dim(), std::vector<BigInt>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
  return out;
}

// Faddeev-LeVerrier over the rationals: c_{n-k} = -tr(A M_k) / k.
inline IntPoly charpoly_faddeev(const IntMatrix& a) {
  const std::size_t n = a.dim();
  using Q = BigRational;
  std::vector<std::vector<Q>> A(n, std::vector<Q>(n)), M(n, std::vector<Q>(n, Q(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = Q(a(i, j));
  std::vector<Q> c(n + 1, Q(0));
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<Q>> next(n, std::vector<Q>(n, Q(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) next[i][j] += A[i][l] * M[l][j];
        if (i == j) next[i][j] += c[n - k + 1];
      }
    M = next;
    Q tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    c[n - k] = -tr / Q(static_cast<long long>(k));
  }
  std::vector<BigInt> out;
  for (const auto& q : c) out.push_back(numerator(q));
  return IntPoly(std::move(out));
}

// Gaussian elimination over the rationals.
inline std::size_t rank_rational(const std::vector<std::vector<BigInt>>& in) {
  std::vector<std::vector<BigRational>> m;
  for (const auto& r : in) {
    std::vector<BigRational> row;
    for (const auto& x : r) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const BigRational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Polynomials over F_p as coefficient vectors, ascending, monic where noted.
using PolyP = std::vector<int>;

inline PolyP mod_remainder(PolyP f, const PolyP& g, int p) {  // g monic
  const std::size_t dg = g.size() - 1;
  while (f.size() >= g.size()) {
    const int lead = f.back();
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = ((f[shift + i] - lead * g[i]) % p + p) % p;
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  return f;
}

inline std::vector<PolyP> monic_polys_mod_p(int p, int degree) {
  std::vector<PolyP> out;
  std::size_t count = 1;
  for (int i = 0; i < degree; ++i) count *= static_cast<std::size_t>(p);
  for (std::size_t code = 0; code < count; ++code) {
    PolyP f(static_cast<std::size_t>(degree) + 1);
    std::size_t c = code;
    for (int i = 0; i < degree; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::size_t>(p));
      c /= static_cast<std::size_t>(p);
    }
    f[static_cast<std::size_t>(degree)] = 1;
    out.push_back(std::move(f));
  }
  return out;
}

// Irreducible monic polynomials of degree n over F_p by trial division with
// every monic polynomial of degree 1..n/2.
inline std::uint64_t count_irreducible_bruteforce(int p, int n) {
  std::vector<PolyP> divisors;
  for (int d = 1; d <= n / 2; ++d)
    for (auto& g : monic_polys_mod_p(p, d)) divisors.push_back(std::move(g));
  std::uint64_t count = 0;
  for (const auto& f : monic_polys_mod_p(p, n)) {
    bool irreducible = true;
    for (const auto& g : divisors) {
      if (mod_remainder(f, g, p).empty()) {
        irreducible = false;
        break;
      }
    }
    count += irreducible;
  }
  return count;
}

// prod over cycles of the permutation of (z^len - 1).
inline IntPoly cycle_product(const std::vector<int>& perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  IntPoly out{1};
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    out = out * (IntPoly::monomial(len, 1) - IntPoly{1});
  }
  return out;
}

inline IntMatrix permutation_matrix(const std::vector<int>& perm) {
  IntMatrix m(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(i, static_cast<std::size_t>(perm[i])) = 1;
  return m;
}

}  // namespace oracle
