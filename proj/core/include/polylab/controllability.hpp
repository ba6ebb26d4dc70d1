#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polylab/factor_search.hpp"
#include "polylab/int_matrix.hpp"

namespace polylab {

/// Simple undirected graph on vertices 0..n-1 (n <= 64), rows bit-packed.
class Graph {
 public:
  explicit Graph(int n);

  /// Throws InvalidArgument for loops or endpoints out of range. Repeated
  /// edges are accepted once.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  /// Requires a symmetric 0/1 matrix with zero diagonal.
  static Graph from_adjacency(const IntMatrix& a);
  /// Bit e of `mask` selects the e-th pair (i, j), i < j, in lexicographic
  /// order, so masks 0..2^(n(n-1)/2)-1 cover every labelled graph once.
  static Graph from_index(int n, std::uint64_t mask);

  int n() const { return n_; }
  bool has_edge(int i, int j) const { return (rows_[static_cast<std::size_t>(i)] >> j) & 1u; }
  void add_edge(int i, int j);
  int degree(int i) const;
  std::vector<std::pair<int, int>> edges() const;
  IntMatrix adjacency() const;

 private:
  int n_;
  std::vector<std::uint64_t> rows_;
};

Graph path_graph(int n);
Graph complete_graph(int n);

/// Columns b, Ab, ..., A^(n-1) b.
IntMatrix kalman_matrix(const IntMatrix& a, std::span<const BigInt> b);

/// Rank of integer rows reduced modulo the prime p (p < 2^32).
std::size_t rank_mod_p(const std::vector<std::vector<BigInt>>& rows, std::uint64_t p);

/// Exact rank of the Kalman matrix. Full rank modulo one of three fixed
/// 31-bit primes settles the answer; otherwise fraction-free elimination
/// decides.
bool is_controllable(const IntMatrix& a, std::span<const BigInt> b);

/// (A, 1) controllable.
bool graph_controllable(const Graph& g);
/// (A, e_i) controllable for every vertex i.
bool minimally_controllable(const Graph& g);

/// Number of automorphisms by backtracking over degree-compatible images.
/// Throws InvalidArgument for n > 10.
std::uint64_t automorphisms_bruteforce(const Graph& g);

enum class CrossCheckVerdict { Holds, Violation, Skipped };
std::string to_string(CrossCheckVerdict v);

struct ControllabilityCrossCheck {
  CrossCheckVerdict verdict = CrossCheckVerdict::Skipped;
  FactorStatus charpoly_status = FactorStatus::Unknown;
  bool controllable = false;
  bool minimally_controllable = false;
  std::optional<std::uint64_t> automorphisms;  // computed when n <= 10
  std::string detail;
};

/// Irreducible characteristic polynomial must imply controllable and
/// minimally controllable; controllable must imply no nontrivial
/// automorphism. Unknown irreducibility gives Skipped.
ControllabilityCrossCheck controllability_cross_check(const Graph& g, const ClassifyOptions& effort = {});

struct GraphSweepSummary {
  int n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t irreducible = 0;
  std::uint64_t controllable = 0;
  std::uint64_t minimally_controllable = 0;
  std::uint64_t asymmetric = 0;  // among controllable graphs
  std::uint64_t skipped = 0;
  std::uint64_t violations = 0;
  std::vector<std::uint64_t> violating_masks;
};

/// controllability_cross_check on every labelled graph on n <= 7 vertices.
GraphSweepSummary controllability_sweep(int n, unsigned workers = 0);

}  // namespace polylab
