#include "copc/enumeration.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace copc {

namespace {

void check_enumeration_order(int n) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumeration supports orders 0.." +
                                std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
  }
}

int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j

// Ordered cells of an equitable-style colour refinement seeded by degree.
std::vector<std::vector<int>> refined_cells(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int distinct = -1;
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> key{colour[v]};
      std::vector<int> around;
      for (int u = 0; u < n; ++u)
        if (g.adjacent(u, v)) around.push_back(colour[u]);
      std::sort(around.begin(), around.end());
      key.insert(key.end(), around.begin(), around.end());
      sig[v] = {std::move(key), v};
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s.first, 0);
    int next = 0;
    for (auto& kv : rank) kv.second = next++;
    for (int v = 0; v < n; ++v) colour[v] = rank[sig[v].first];
    if (next == distinct) break;
    distinct = next;
  }
  std::vector<std::vector<int>> cells(static_cast<std::size_t>(distinct));
  for (int v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  return cells;
}

struct CanonicalSearch {
  const Graph& g;
  int n;
  int bits;
  std::vector<std::vector<int>> cells;
  std::array<int, kMaxEnumerationOrder> position{};
  std::uint64_t best = ~std::uint64_t{0};
  std::array<int, kMaxEnumerationOrder> best_position{};

  explicit CanonicalSearch(const Graph& graph)
      : g(graph), n(graph.order()), bits(n * (n - 1) / 2), cells(refined_cells(graph)) {}

  std::uint64_t code() const {
    std::uint64_t c = 0;
    for (const Edge& e : g.edges()) {
      const int a = std::min(position[e.u], position[e.v]);
      const int b = std::max(position[e.u], position[e.v]);
      c |= std::uint64_t{1} << (bits - 1 - pair_index(a, b));
    }
    return c;
  }

  void visit(std::size_t cell, int offset) {
    if (cell == cells.size()) {
      const std::uint64_t c = code();
      if (c < best) {
        best = c;
        best_position = position;
      }
      return;
    }
    std::vector<int> members = cells[cell];  // sorted ascending
    do {
      for (std::size_t i = 0; i < members.size(); ++i) position[members[i]] = offset + static_cast<int>(i);
      visit(cell + 1, offset + static_cast<int>(members.size()));
    } while (std::next_permutation(members.begin(), members.end()));
  }

  void run() {
    if (n == 0) {
      best = 0;
      return;
    }
    visit(0, 0);
  }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  check_enumeration_order(g.order());
  CanonicalSearch search(g);
  search.run();
  return search.best;
}

Graph canonical_form(const Graph& g) {
  check_enumeration_order(g.order());
  CanonicalSearch search(g);
  search.run();
  std::vector<int> perm(search.best_position.begin(), search.best_position.begin() + g.order());
  return relabel(g, perm);
}

GraphCatalog::GraphCatalog(int n) : n_(n) {
  check_enumeration_order(n);
  const int top = n * (n - 1) / 2;
  levels_.resize(static_cast<std::size_t>(top) + 1);
  levels_[0].push_back(Graph(n));
  // Every graph of size m + 1 is a graph of size m plus one edge, so extending
  // each class representative by every non-edge reaches every class.
  for (int m = 0; m < top; ++m) {
    std::unordered_map<std::uint64_t, Graph> seen;
    for (const Graph& g : levels_[m]) {
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v)) continue;
          const Graph h = g.with_edge(u, v);
          const std::uint64_t c = canonical_code(h);
          if (!seen.contains(c)) seen.emplace(c, canonical_form(h));
        }
      }
    }
    std::vector<std::pair<std::uint64_t, Graph>> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& entry : sorted) levels_[m + 1].push_back(std::move(entry.second));
  }
}

const std::vector<Graph>& GraphCatalog::classes(int m) const {
  if (m < 0 || m > max_size()) {
    throw std::invalid_argument("edge count " + std::to_string(m) + " outside [0, " +
                                std::to_string(max_size()) + "]");
  }
  return levels_[static_cast<std::size_t>(m)];
}

std::size_t GraphCatalog::total() const {
  std::size_t t = 0;
  for (const auto& level : levels_) t += level.size();
  return t;
}

const GraphCatalog& catalog_for(int n) {
  check_enumeration_order(n);
  static std::mutex guard;
  static std::array<std::unique_ptr<GraphCatalog>, kMaxEnumerationOrder + 1> cache;
  std::lock_guard lock(guard);
  if (!cache[n]) cache[n] = std::make_unique<GraphCatalog>(n);
  return *cache[n];
}

std::vector<Graph> enumerate_gnm(int n, int m) { return catalog_for(n).classes(m); }

void for_each_gnm(int n, int m, const std::function<void(const Graph&)>& visit) {
  for (const Graph& g : catalog_for(n).classes(m)) visit(g);
}

}  // namespace copc
