#include "polylab/controllability.hpp"

#include <atomic>
#include <bit>
#include <mutex>

#include "polylab/detail/parallel.hpp"
#include "polylab/error.hpp"

namespace polylab {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > 64) throw InvalidArgument("graph size must be in [1, 64]");
  rows_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::add_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw InvalidArgument("edge endpoint out of range");
  if (i == j) throw InvalidArgument("loops are not allowed in a simple graph");
  rows_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  rows_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
}

int Graph::degree(int i) const { return std::popcount(rows_[static_cast<std::size_t>(i)]); }

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

Graph Graph::from_adjacency(const IntMatrix& a) {
  const int n = static_cast<int>(a.dim());
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const BigInt& x = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (x != 0 && x != 1) throw InvalidArgument("adjacency entries must be 0 or 1");
      if (x != a(static_cast<std::size_t>(j), static_cast<std::size_t>(i))) throw InvalidArgument("adjacency must be symmetric");
      if (i == j && x != 0) throw InvalidArgument("adjacency must have zero diagonal");
      if (i < j && x == 1) g.add_edge(i, j);
    }
  }
  return g;
}

Graph Graph::from_index(int n, std::uint64_t mask) {
  Graph g(n);
  int e = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++e) {
      if (e < 64 && ((mask >> e) & 1u)) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

IntMatrix Graph::adjacency() const {
  IntMatrix a(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (has_edge(i, j)) a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
  return a;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

IntMatrix kalman_matrix(const IntMatrix& a, std::span<const BigInt> b) {
  const std::size_t n = a.dim();
  if (b.size() != n) throw InvalidArgument("vector length does not match the matrix dimension");
  IntMatrix k(n);
  std::vector<BigInt> col(b.begin(), b.end());
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) k(r, c) = col[r];
    if (c + 1 < n) col = mat_vec(a, col);
  }
  return k;
}

std::size_t rank_mod_p(const std::vector<std::vector<BigInt>>& rows, std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 32)) throw InvalidArgument("modulus must lie in [2, 2^32)");
  std::vector<std::vector<std::uint64_t>> m;
  for (const auto& row : rows) {
    std::vector<std::uint64_t> r;
    for (const auto& x : row) {
      BigInt y = x % p;
      if (y < 0) y += p;
      r.push_back(y.convert_to<std::uint64_t>());
    }
    m.push_back(std::move(r));
  }
  auto pow_mod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t res = 1;
    while (e) {
      if (e & 1) res = res * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return res;
  };
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = pow_mod(m[rank][c], p - 2);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const std::uint64_t factor = m[r][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) m[r][j] = (m[r][j] + (p - factor) * m[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

namespace {

constexpr std::uint64_t kFilterPrimes[] = {2147483647ull, 2147483629ull, 2147483587ull};

std::vector<std::vector<BigInt>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> rows(m.dim(), std::vector<BigInt>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace

bool is_controllable(const IntMatrix& a, std::span<const BigInt> b) {
  const auto rows = rows_of(kalman_matrix(a, b));
  for (std::uint64_t p : kFilterPrimes) {
    if (rank_mod_p(rows, p) == a.dim()) return true;
  }
  return rank_exact(rows) == a.dim();
}

bool graph_controllable(const Graph& g) {
  const std::vector<BigInt> ones(static_cast<std::size_t>(g.n()), 1);
  return is_controllable(g.adjacency(), ones);
}

bool minimally_controllable(const Graph& g) {
  const IntMatrix a = g.adjacency();
  for (int i = 0; i < g.n(); ++i) {
    std::vector<BigInt> e(static_cast<std::size_t>(g.n()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    if (!is_controllable(a, e)) return false;
  }
  return true;
}

namespace {

struct AutomorphismSearch {
  const Graph& g;
  std::vector<int> image;
  std::vector<bool> used;
  std::uint64_t count = 0;

  void extend(int v) {
    const int n = g.n();
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.has_edge(u, v) == g.has_edge(image[static_cast<std::size_t>(u)], w);
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      extend(v + 1);
      used[static_cast<std::size_t>(w)] = false;
    }
  }
};

}  // namespace

std::uint64_t automorphisms_bruteforce(const Graph& g) {
  if (g.n() > 10) throw InvalidArgument("automorphism brute force is limited to n <= 10");
  AutomorphismSearch s{g, std::vector<int>(static_cast<std::size_t>(g.n()), -1),
                       std::vector<bool>(static_cast<std::size_t>(g.n()), false)};
  s.extend(0);
  return s.count;
}

std::string to_string(CrossCheckVerdict v) {
  switch (v) {
    case CrossCheckVerdict::Holds: return "holds";
    case CrossCheckVerdict::Violation: return "violation";
    case CrossCheckVerdict::Skipped: return "skipped";
  }
  return "?";
}

ControllabilityCrossCheck controllability_cross_check(const Graph& g, const ClassifyOptions& effort) {
  ControllabilityCrossCheck c;
  const IntPoly f = mat_charpoly_exact(g.adjacency());
  c.charpoly_status = classify_irreducibility(f, effort).status;
  c.controllable = graph_controllable(g);
  c.minimally_controllable = minimally_controllable(g);
  if (g.n() <= 10) c.automorphisms = automorphisms_bruteforce(g);

  if (c.charpoly_status == FactorStatus::Unknown) {
    c.verdict = CrossCheckVerdict::Skipped;
    c.detail = "irreducibility of the characteristic polynomial not settled";
    return c;
  }
  c.verdict = CrossCheckVerdict::Holds;
  if (c.charpoly_status == FactorStatus::Irreducible && !(c.controllable && c.minimally_controllable)) {
    c.verdict = CrossCheckVerdict::Violation;
    c.detail = "irreducible characteristic polynomial but not (minimally) controllable";
  } else if (c.controllable && c.automorphisms && *c.automorphisms != 1) {
    c.verdict = CrossCheckVerdict::Violation;
    c.detail = "controllable graph with a nontrivial automorphism";
  }
  return c;
}

GraphSweepSummary controllability_sweep(int n, unsigned workers) {
  if (n < 1 || n > 7) throw InvalidArgument("exhaustive graph sweep supports 1 <= n <= 7");
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  GraphSweepSummary s;
  s.n = n;
  s.graphs = total;
  std::atomic<std::uint64_t> irreducible{0}, controllable{0}, minimal{0}, asymmetric{0}, skipped{0};
  std::mutex mutex;
  std::vector<std::uint64_t> bad;
  const unsigned w = workers > 0 ? workers : std::max(1u, std::thread::hardware_concurrency());
  parallel_trials(total, w, [&](std::uint64_t mask) {
    const ControllabilityCrossCheck c = controllability_cross_check(Graph::from_index(n, mask));
    if (c.charpoly_status == FactorStatus::Irreducible) irreducible.fetch_add(1, std::memory_order_relaxed);
    if (c.controllable) controllable.fetch_add(1, std::memory_order_relaxed);
    if (c.minimally_controllable) minimal.fetch_add(1, std::memory_order_relaxed);
    if (c.controllable && c.automorphisms && *c.automorphisms == 1) asymmetric.fetch_add(1, std::memory_order_relaxed);
    if (c.verdict == CrossCheckVerdict::Skipped) skipped.fetch_add(1, std::memory_order_relaxed);
    if (c.verdict == CrossCheckVerdict::Violation) {
      std::lock_guard lock(mutex);
      bad.push_back(mask);
    }
  });
  std::sort(bad.begin(), bad.end());
  s.irreducible = irreducible;
  s.controllable = controllable;
  s.minimally_controllable = minimal;
  s.asymmetric = asymmetric;
  s.skipped = skipped;
  s.violations = bad.size();
  s.violating_masks = std::move(bad);
  return s;
}

}  // namespace polylab
