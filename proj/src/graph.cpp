#include "copc/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

namespace copc {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxVertices) + "]");
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add(e.u, e.v);
}

int Graph::check(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(n_));
  }
  return v;
}

void Graph::add(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if ((adj_[u] >> v) & 1U) {
    throw std::invalid_argument("duplicate edge " + std::to_string(std::min(u, v)) + " " +
                                std::to_string(std::max(u, v)));
  }
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
  ++m_;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add(i, i + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add(n - 1, 0);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add(u, v);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative part size");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add(u, v);
  return g;
}

int Graph::degree(int v) const { return std::popcount(adj_[check(v)]); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    VertexMask later = adj_[u] & ~low_mask(u + 1);
    while (later) {
      const int v = std::countr_zero(later);
      later &= later - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.add(u, v);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (!adjacent(u, v)) {
    throw std::invalid_argument("edge " + std::to_string(u) + " " + std::to_string(v) +
                                " not in graph");
  }
  Graph g = *this;
  g.adj_[u] &= ~bit(v);
  g.adj_[v] &= ~bit(u);
  --g.m_;
  return g;
}

std::vector<VertexMask> component_masks(const Graph& g, VertexMask active) {
  std::vector<VertexMask> out;
  VertexMask unseen = active & g.all_vertices();
  while (unseen) {
    VertexMask comp = unseen & (~unseen + 1);
    VertexMask frontier = comp;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const VertexMask fresh = g.neighbors(v) & unseen & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    unseen &= ~comp;
    out.push_back(comp);
  }
  return out;
}

ComponentSummary components(const Graph& g, VertexMask active) {
  ComponentSummary s;
  for (VertexMask c : component_masks(g, active)) s.component_orders.push_back(std::popcount(c));
  std::sort(s.component_orders.begin(), s.component_orders.end(), std::greater<>());
  s.largest = s.component_orders.empty() ? 0 : s.component_orders.front();
  return s;
}

ComponentSummary components(const Graph& g) { return components(g, g.all_vertices()); }

bool is_failure_state(const Graph& g, VertexMask active, const Threshold& t) {
  return components(g, active).largest <= t.tau;
}

bool is_failure_state(const Graph& g, const Threshold& t) {
  return is_failure_state(g, g.all_vertices(), t);
}

Graph remove_vertices(const Graph& g, std::span<const int> vertices) {
  VertexMask removed = 0;
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
    }
    removed |= bit(v);
  }
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int v = 0; v < g.order(); ++v)
    if (!(removed & bit(v))) label[v] = next++;
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (label[e.u] >= 0 && label[e.v] >= 0) kept.emplace_back(label[e.u], label[e.v]);
  return Graph(next, kept);
}

Graph remove_edges(const Graph& g, std::span<const Edge> edges) {
  Graph out = g;
  for (const Edge& e : edges) out = out.without_edge(e.u, e.v);
  return out;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw std::invalid_argument("relabeling size does not match graph order");
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), edges);
}

}  // namespace copc
