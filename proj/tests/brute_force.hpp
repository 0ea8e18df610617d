#pragma once

// Dead-simple reference implementations used only by the tests. Nothing here
// calls into the solver, the enumeration or the max-cut search.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "copc/graph.hpp"

namespace brute {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const copc::Graph& g) {
  Matrix a(g.order(), std::vector<bool>(g.order(), false));
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v) a[u][v] = g.adjacent(u, v);
  return a;
}

// Largest component among vertices with alive[v], by plain DFS on a matrix.
inline int largest_component(const Matrix& a, const std::vector<bool>& alive) {
  const int n = static_cast<int>(a.size());
  std::vector<bool> seen(n, false);
  int best = 0;
  for (int s = 0; s < n; ++s) {
    if (!alive[s] || seen[s]) continue;
    int size = 0;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      ++size;
      for (int y = 0; y < n; ++y)
        if (a[x][y] && alive[y] && !seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    best = std::max(best, size);
  }
  return best;
}

// Lexicographic k-combinations of 0..n-1; calls f until it returns true.
template <class F>
bool combinations(int n, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  for (;;) {
    if (f(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Answer {
  int size = 0;
  std::vector<int> chosen;  // indices, lexicographically first of minimum size
};

inline Answer vertex_connectivity(const copc::Graph& g, int tau) {
  const Matrix a = matrix_of(g);
  const int n = g.order();
  for (int k = 0; k <= n; ++k) {
    Answer ans;
    if (combinations(n, k, [&](const std::vector<int>& s) {
          std::vector<bool> alive(n, true);
          for (int v : s) alive[v] = false;
          if (largest_component(a, alive) <= tau) {
            ans = {k, s};
            return true;
          }
          return false;
        }))
      return ans;
  }
  return {n, {}};
}

inline std::optional<Answer> edge_connectivity(const copc::Graph& g, int tau) {
  const int n = g.order();
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<bool> alive(n, true);
  for (int k = 0; k <= m; ++k) {
    Answer ans;
    if (combinations(m, k, [&](const std::vector<int>& s) {
          Matrix a = matrix_of(g);
          for (int i : s) a[edges[i].u][edges[i].v] = a[edges[i].v][edges[i].u] = false;
          if (largest_component(a, alive) <= tau) {
            ans = {k, s};
            return true;
          }
          return false;
        }))
      return ans;
  }
  return std::nullopt;
}

inline int cut_of(const copc::Graph& g, std::uint64_t side) {
  int c = 0;
  for (const copc::Edge& e : g.edges()) c += (((side >> e.u) ^ (side >> e.v)) & 1U) ? 1 : 0;
  return c;
}

inline int max_cut(const copc::Graph& g) {
  int best = 0;
  for (std::uint64_t side = 0; side < (std::uint64_t{1} << g.order()); ++side) best = std::max(best, cut_of(g, side));
  return best;
}

inline copc::Graph random_graph(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<copc::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return copc::Graph(n, edges);
}

inline copc::Graph random_graph_with_size(std::mt19937& rng, int n, int m) {
  std::vector<copc::Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(m));
  return copc::Graph(n, all);
}

// All labeled graphs of order n (n <= 5 keeps this at 1024 graphs).
inline std::vector<copc::Graph> all_labeled(int n) {
  std::vector<copc::Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<copc::Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<copc::Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    out.emplace_back(n, edges);
  }
  return out;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace brute
