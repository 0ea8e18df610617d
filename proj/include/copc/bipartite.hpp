#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copc/graph.hpp"
#include "copc/proportion.hpp"

namespace copc {

inline constexpr int kMaxCutOrder = 24;

struct BipartiteWitness {
  std::vector<int> part_a;  // contains vertex 0 when the graph is nonempty
  std::vector<int> part_b;
  int crossing_edges = 0;
};

/// Number of edges with exactly one endpoint in `side`.
int crossing_edges(const Graph& g, VertexMask side);

/// b(G), the largest bipartite subgraph, i.e. the maximum cut. Among optimal
/// bipartitions the one whose vertex-0 side is lexicographically smallest (as a
/// sorted label sequence) is returned.
BipartiteWitness max_bipartite_subgraph(const Graph& g);

/// ceil(m/2 + (sqrt(8m+1) - 1)/8), evaluated with integer arithmetic only.
std::int64_t edwards_bound(std::int64_t m);

struct EgkBounds {
  std::optional<std::int64_t> no_isolated;  // ceil((m + n/3)/2), graphs without isolated vertices
  std::optional<std::int64_t> connected;    // ceil((m + (n-1)/2)/2), connected graphs
};

EgkBounds egk_bounds(const Graph& g);

/// Minimum number of edges crossing a partition of V into k blocks of equal
/// order n/k. Nothing when k does not divide n.
std::optional<int> balanced_partition_cut(const Graph& g, int k);

/// Exact rational a/b kept in lowest terms, used for verdict quantities.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction of(std::int64_t num, std::int64_t den);
  std::string to_string() const;
};

struct ConjectureVerdict {
  std::string name;  // "equal_partition" | "coemax_upper_bound"
  int n = 0;
  int m = 0;
  Proportion r{1, 2};
  bool holds = false;
  Fraction lhs;
  Fraction rhs;
  std::optional<Graph> witness;
  std::string details;
};

/// At r = 1/k with k | n: does some graph attaining COEMAX over G(n, m) have a
/// minimum edge disconnecting set whose failure state splits V into k groups of
/// components, each group of order exactly n/k? lhs is COEMAX, rhs the smallest
/// balanced k-way cut among maximizers; holds iff they are equal.
ConjectureVerdict check_equal_partition_conjecture(int n, int m, int k);

/// COEMAX over G(n, m) at r = 1/2 (lhs) against m/2 + 7n/12 (rhs), n even.
ConjectureVerdict check_coemax_upper_bound(int n, int m);

/// For every balanced bipartition (A, B): cross_G(A,B) + cross_complement(A,B) = n^2/4.
bool bipartite_complement_duality_check(const Graph& g);

}  // namespace copc
