#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "copc/proportion.hpp"

namespace copc {

inline constexpr int kMaxVertices = 64;

using VertexMask = std::uint64_t;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }
inline constexpr VertexMask low_mask(int n) { return n >= 64 ? ~VertexMask{0} : bit(n) - 1; }

/// Undirected edge stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with one adjacency bitset per vertex.
/// Values are immutable once built; all mutators return new graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph complete_bipartite(int a, int b);

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(int u, int v) const { return (adj_[check(u)] >> check(v)) & 1U; }
  VertexMask neighbors(int v) const { return adj_[check(v)]; }
  int degree(int v) const;
  VertexMask all_vertices() const { return low_mask(n_); }

  /// Edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int check(int v) const;
  void add(int u, int v);

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexMask> adj_;
};

struct ComponentSummary {
  std::vector<int> component_orders;  // descending
  int largest = 0;
};

ComponentSummary components(const Graph& g);

/// Component orders of the subgraph induced by `active`.
ComponentSummary components(const Graph& g, VertexMask active);

/// Vertex masks of the connected components of the subgraph induced by `active`.
std::vector<VertexMask> component_masks(const Graph& g, VertexMask active);

/// True iff every component has order at most t.tau. The empty graph is failing.
bool is_failure_state(const Graph& g, const Threshold& t);
bool is_failure_state(const Graph& g, VertexMask active, const Threshold& t);

/// Induced subgraph on the remaining vertices, relabeled in increasing order.
Graph remove_vertices(const Graph& g, std::span<const int> vertices);
Graph remove_edges(const Graph& g, std::span<const Edge> edges);
Graph complement(const Graph& g);

/// Applies a relabeling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace copc
