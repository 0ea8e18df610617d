#include "copc/exact_solver.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace copc {

// ---------------------------------------------------------------------------
// Vertex search
// ---------------------------------------------------------------------------

namespace {

std::vector<VertexMask> oversized_components(const Graph& g, VertexMask active, int tau) {
  std::vector<VertexMask> big;
  for (VertexMask c : component_masks(g, active))
    if (std::popcount(c) > tau) big.push_back(c);
  return big;
}

// Repeatedly deletes a maximum-degree vertex of some oversized component.
int greedy_vertex_bound(const Graph& g, int tau) {
  VertexMask active = g.all_vertices();
  int removed = 0;
  for (;;) {
    const auto big = oversized_components(g, active, tau);
    if (big.empty()) return removed;
    int best = -1;
    int best_degree = -1;
    for (VertexMask c : big) {
      for (VertexMask rest = c; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int d = std::popcount(g.neighbors(v) & active);
        if (d > best_degree) {
          best_degree = d;
          best = v;
        }
      }
    }
    active &= ~bit(best);
    ++removed;
  }
}

class VertexSearch {
 public:
  VertexSearch(const Graph& g, int tau) : g_(g), tau_(tau) {}

  // Lexicographic DFS over `budget`-subsets. A vertex outside every oversized
  // component of the current remainder never belongs to a minimum set, and each
  // oversized component needs a removal of its own.
  bool run(VertexMask removed, int next, int budget) {
    const auto big = oversized_components(g_, g_.all_vertices() & ~removed, tau_);
    if (big.empty()) {
      if (budget == 0) {
        found_ = removed;
        return true;
      }
      return false;
    }
    if (budget == 0 || static_cast<int>(big.size()) > budget) return false;
    const VertexMask allowed = ~low_mask(next);
    VertexMask candidates = 0;
    for (VertexMask c : big) {
      if (!(c & allowed)) return false;
      candidates |= c & allowed;
    }
    for (; candidates; candidates &= candidates - 1) {
      const int v = std::countr_zero(candidates);
      if (run(removed | bit(v), v + 1, budget - 1)) return true;
    }
    return false;
  }

  VertexMask found() const { return found_; }

 private:
  const Graph& g_;
  int tau_;
  VertexMask found_ = 0;
};

VertexMask min_vertex_set(const Graph& g, int tau) {
  const auto big = oversized_components(g, g.all_vertices(), tau);
  if (big.empty()) return 0;
  const int upper = greedy_vertex_bound(g, tau);
  VertexSearch search(g, tau);
  for (int k = static_cast<int>(big.size()); k <= upper; ++k) {
    if (search.run(0, 0, k)) return search.found();
  }
  throw std::logic_error("vertex search exceeded its own greedy bound");
}

// ---------------------------------------------------------------------------
// Partition branch and bound
// ---------------------------------------------------------------------------

class PartitionSearch {
 public:
  explicit PartitionSearch(const PartitionProblem& p)
      : p_(p), n_(static_cast<int>(p.weight.size())) {
    order_ = search_order();
    assigned_conn_.assign(n_, 0);
    block_conn_.assign(n_, std::vector<int>(n_, 0));
    block_weight_.assign(n_, 0);
    block_of_.assign(n_, -1);
    suffix_weight_.assign(n_ + 1, 0);
    for (int i = n_ - 1; i >= 0; --i) suffix_weight_[i] = suffix_weight_[i + 1] + p_.weight[order_[i]];
  }

  std::optional<PartitionSolution> solve() {
    for (int w : p_.weight)
      if (w > p_.capacity) return std::nullopt;
    best_ = INT_MAX;
    dfs(0, 0);
    if (best_ == INT_MAX) return std::nullopt;
    return PartitionSolution{best_, best_block_of_};
  }

 private:
  // Heaviest-connected node first, then repeatedly the node most attached to
  // the already ordered ones; keeps the running cut informative early.
  std::vector<int> search_order() const {
    std::vector<int> order;
    std::vector<bool> placed(n_, false);
    std::vector<int> attach(n_, 0);
    for (int step = 0; step < n_; ++step) {
      int pick = -1;
      long key = -1;
      for (int x = 0; x < n_; ++x) {
        if (placed[x]) continue;
        long total = 0;
        for (int y = 0; y < n_; ++y) total += p_.edge_weight[x][y];
        const long k = static_cast<long>(attach[x]) * 100000 + total;
        if (k > key) {
          key = k;
          pick = x;
        }
      }
      placed[pick] = true;
      order.push_back(pick);
      for (int y = 0; y < n_; ++y) attach[y] += p_.edge_weight[pick][y];
    }
    return order;
  }

  int lower_bound(int from) const {
    int bound = 0;
    for (int i = from; i < n_; ++i) {
      const int x = order_[i];
      int keep = 0;
      for (int b = 0; b < blocks_; ++b)
        if (block_weight_[b] + p_.weight[x] <= p_.capacity) keep = std::max(keep, block_conn_[x][b]);
      bound += assigned_conn_[x] - keep;
    }
    return bound;
  }

  void place(int x, int b, int delta) {
    block_weight_[b] += delta * p_.weight[x];
    for (int y = 0; y < n_; ++y) {
      const int w = p_.edge_weight[x][y];
      if (w == 0) continue;
      assigned_conn_[y] += delta * w;
      block_conn_[y][b] += delta * w;
    }
    block_of_[x] = delta > 0 ? b : -1;
  }

  void dfs(int i, int cost) {
    if (i == n_) {
      if (cost < best_) {
        best_ = cost;
        best_block_of_ = block_of_;
      }
      return;
    }
    if (cost + lower_bound(i) >= best_) return;

    int free_space = (p_.max_blocks - blocks_) * p_.capacity;
    for (int b = 0; b < blocks_; ++b) free_space += p_.capacity - block_weight_[b];
    if (free_space < suffix_weight_[i]) return;

    const int x = order_[i];
    struct Option {
      int block;
      int added;
    };
    std::vector<Option> options;
    for (int b = 0; b < blocks_; ++b)
      if (block_weight_[b] + p_.weight[x] <= p_.capacity)
        options.push_back({b, assigned_conn_[x] - block_conn_[x][b]});
    if (blocks_ < p_.max_blocks) options.push_back({blocks_, assigned_conn_[x]});
    std::stable_sort(options.begin(), options.end(),
                     [](const Option& a, const Option& b) { return a.added < b.added; });

    for (const Option& o : options) {
      if (cost + o.added >= best_) continue;
      const bool fresh = o.block == blocks_;
      if (fresh) ++blocks_;
      place(x, o.block, +1);
      dfs(i + 1, cost + o.added);
      place(x, o.block, -1);
      if (fresh) --blocks_;
    }
  }

  const PartitionProblem& p_;
  int n_;
  std::vector<int> order_;
  std::vector<int> assigned_conn_;
  std::vector<std::vector<int>> block_conn_;
  std::vector<int> block_weight_;
  std::vector<int> block_of_;
  std::vector<int> suffix_weight_;
  int blocks_ = 0;
  int best_ = INT_MAX;
  std::vector<int> best_block_of_;
};

// ---------------------------------------------------------------------------
// Edge search
// ---------------------------------------------------------------------------

// Union-find over vertices; a class is a set of vertices forced into one block.
struct Classes {
  explicit Classes(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
  std::vector<int> parent;
  std::vector<int> size;
};

// Minimum number of further edges to cut among `present`, given classes of
// vertices that must stay together. Nothing if no admissible partition exists.
std::optional<int> constrained_cut(const Graph& g, const std::vector<Edge>& present, Classes& classes,
                                   int tau) {
  const int n = g.order();
  std::vector<int> index(n, -1);
  std::vector<int> roots;
  for (int v = 0; v < n; ++v) {
    const int root = classes.find(v);
    if (index[root] < 0) {
      index[root] = static_cast<int>(roots.size());
      roots.push_back(root);
    }
  }
  const int k = static_cast<int>(roots.size());
  std::vector<std::vector<int>> w(k, std::vector<int>(k, 0));
  Classes link(k);
  for (const Edge& e : present) {
    const int a = index[classes.find(e.u)];
    const int b = index[classes.find(e.v)];
    if (a == b) continue;
    ++w[a][b];
    ++w[b][a];
    link.unite(a, b);
  }

  // Solve each connected piece of the contracted graph separately.
  std::vector<std::vector<int>> pieces(k);
  for (int x = 0; x < k; ++x) pieces[link.find(x)].push_back(x);
  int total = 0;
  for (const auto& piece : pieces) {
    if (piece.empty()) continue;
    int weight = 0;
    for (int x : piece) weight += classes.size[roots[x]];
    if (weight <= tau) continue;
    PartitionProblem problem;
    problem.capacity = tau;
    for (int x : piece) problem.weight.push_back(classes.size[roots[x]]);
    problem.edge_weight.assign(piece.size(), std::vector<int>(piece.size(), 0));
    for (std::size_t i = 0; i < piece.size(); ++i)
      for (std::size_t j = 0; j < piece.size(); ++j) problem.edge_weight[i][j] = w[piece[i]][piece[j]];
    const auto solution = min_partition_cut(problem);
    if (!solution) return std::nullopt;
    total += solution->cut;
  }
  return total;
}

}  // namespace

std::optional<PartitionSolution> min_partition_cut(const PartitionProblem& problem) {
  const std::size_t n = problem.weight.size();
  if (problem.edge_weight.size() != n) throw std::invalid_argument("edge weight matrix size mismatch");
  if (n == 0) return PartitionSolution{};
  if (problem.capacity <= 0 || problem.max_blocks <= 0) return std::nullopt;
  return PartitionSearch(problem).solve();
}

int copvc_value(const Graph& g, const Threshold& t) {
  return std::popcount(min_vertex_set(g, t.tau));
}

std::optional<int> copec_value(const Graph& g, const Threshold& t) {
  if (is_failure_state(g, t)) return 0;
  if (t.tau == 0) return std::nullopt;
  Classes classes(g.order());
  return constrained_cut(g, g.edges(), classes, t.tau);
}

DisconnectingWitness copvc_exact(const Graph& g, const Proportion& r) {
  const Threshold t = Threshold::of(r, g.order());
  DisconnectingWitness w;
  w.kind = DisconnectKind::vertex;
  for (VertexMask s = min_vertex_set(g, t.tau); s; s &= s - 1) w.vertices.push_back(std::countr_zero(s));
  w.cardinality = static_cast<int>(w.vertices.size());
  return w;
}

DisconnectingWitness copec_exact(const Graph& g, const Proportion& r) {
  const Threshold t = Threshold::of(r, g.order());
  DisconnectingWitness w;
  w.kind = DisconnectKind::edge;
  const auto value = copec_value(g, t);
  if (!value) return w;
  w.cardinality = *value;
  if (*value == 0) return w;

  // Decide edges in lexicographic order, removing each one whenever a minimum
  // set still exists that contains every removal made so far and avoids every
  // edge kept so far. This yields the lexicographically smallest minimum set.
  const auto all = g.edges();
  std::vector<bool> oversized(g.order(), false);
  for (VertexMask c : component_masks(g, g.all_vertices()))
    if (std::popcount(c) > t.tau)
      for (VertexMask rest = c; rest; rest &= rest - 1) oversized[std::countr_zero(rest)] = true;

  Classes kept(g.order());
  std::vector<bool> removed(all.size(), false);
  int removed_count = 0;
  auto present_edges = [&](std::size_t skip) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (!removed[i] && i != skip) out.push_back(all[i]);
    return out;
  };

  for (std::size_t i = 0; i < all.size(); ++i) {
    const Edge& e = all[i];
    bool take = false;
    if (removed_count < *value && oversized[e.u]) {
      Classes trial = kept;
      const auto rest = constrained_cut(g, present_edges(i), trial, t.tau);
      take = rest && removed_count + 1 + *rest == *value;
    }
    if (take) {
      removed[i] = true;
      ++removed_count;
      w.edges.push_back(e);
    } else {
      kept.unite(e.u, e.v);
    }
  }
  if (removed_count != *value) throw std::logic_error("edge witness reconstruction failed");
  return w;
}

bool verify_witness(const Graph& g, const Proportion& r, const DisconnectingWitness& w) {
  if (!w.feasible()) return false;
  const Threshold t = Threshold::of(r, g.order());
  Graph rest;
  try {
    if (w.kind == DisconnectKind::vertex) {
      if (!w.edges.empty() || static_cast<int>(w.vertices.size()) != *w.cardinality) return false;
      rest = remove_vertices(g, w.vertices);
    } else {
      if (!w.vertices.empty() || static_cast<int>(w.edges.size()) != *w.cardinality) return false;
      rest = remove_edges(g, w.edges);
    }
  } catch (const std::exception&) {
    return false;  // names a vertex or edge the graph does not have
  }
  return is_failure_state(rest, t);
}

}  // namespace copc
