#include "copc/bipartite.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "copc/enumeration.hpp"
#include "copc/exact_solver.hpp"

namespace copc {

int crossing_edges(const Graph& g, VertexMask side) {
  int count = 0;
  for (VertexMask rest = side & g.all_vertices(); rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    count += std::popcount(g.neighbors(v) & ~side);
  }
  return count;
}

namespace {

class MaxCutSearch {
 public:
  explicit MaxCutSearch(const Graph& g) : g_(g), n_(g.order()) {}

  VertexMask run() {
    visit(bit(0), 0);
    return best_side_;
  }

  int best() const { return best_; }

 private:
  // Pre-order over sets containing 0 ordered by their sorted label sequence;
  // the first optimum met is the lexicographically smallest.
  void visit(VertexMask side, int last) {
    const int cut = crossing_edges(g_, side);
    if (cut > best_) {
      best_ = cut;
      best_side_ = side;
    }
    if (last + 1 >= n_) return;
    // Cut among decided vertices plus every edge still touching an undecided one.
    const VertexMask decided = low_mask(last + 1);
    int settled = 0;
    for (VertexMask rest = decided; rest; rest &= rest - 1)
      settled += std::popcount(g_.neighbors(std::countr_zero(rest)) & decided);
    const int bound = crossing_into(side, decided & ~side) + g_.size() - settled / 2;
    if (bound <= best_) return;
    for (int j = last + 1; j < n_; ++j) visit(side | bit(j), j);
  }

  // Edges from `side` into `region`.
  int crossing_into(VertexMask side, VertexMask region) const {
    int count = 0;
    for (VertexMask rest = side; rest; rest &= rest - 1)
      count += std::popcount(g_.neighbors(std::countr_zero(rest)) & region & g_.all_vertices());
    return count;
  }

  const Graph& g_;
  int n_;
  int best_ = -1;
  VertexMask best_side_ = 0;
};

}  // namespace

BipartiteWitness max_bipartite_subgraph(const Graph& g) {
  if (g.order() > kMaxCutOrder) {
    throw std::invalid_argument("max-cut search supports at most " + std::to_string(kMaxCutOrder) +
                                " vertices");
  }
  BipartiteWitness w;
  if (g.order() == 0) return w;
  MaxCutSearch search(g);
  const VertexMask side = search.run();
  for (int v = 0; v < g.order(); ++v) (side & bit(v) ? w.part_a : w.part_b).push_back(v);
  w.crossing_edges = search.best();
  return w;
}

std::int64_t edwards_bound(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("negative edge count");
  // Smallest k with k >= m/2 + (sqrt(8m+1) - 1)/8, i.e. 8k - 4m + 1 >= sqrt(8m+1).
  for (std::int64_t k = m / 2;; ++k) {
    const std::int64_t lhs = 8 * k - 4 * m + 1;
    if (lhs >= 0 && lhs * lhs >= 8 * m + 1) return k;
  }
}

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

EgkBounds egk_bounds(const Graph& g) {
  EgkBounds out;
  const int n = g.order();
  if (n == 0) return out;
  const std::int64_t m = g.size();
  bool isolated = false;
  for (int v = 0; v < n; ++v) isolated = isolated || g.degree(v) == 0;
  if (!isolated) out.no_isolated = ceil_div(3 * m + n, 6);
  if (components(g).component_orders.size() == 1) out.connected = ceil_div(2 * m + n - 1, 4);
  return out;
}

std::optional<int> balanced_partition_cut(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || n % k != 0) return std::nullopt;
  PartitionProblem problem;
  problem.capacity = n / k;
  problem.max_blocks = k;
  problem.weight.assign(n, 1);
  problem.edge_weight.assign(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) problem.edge_weight[e.u][e.v] = problem.edge_weight[e.v][e.u] = 1;
  const auto solution = min_partition_cut(problem);
  if (!solution) return std::nullopt;
  return solution->cut;
}

Fraction Fraction::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
}

std::string Fraction::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

void check_conjecture_size(int n, int m) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("conjecture checks need 1 <= n <= " +
                                std::to_string(kMaxEnumerationOrder));
  }
  if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("edge count out of range");
}

struct Maximizers {
  int value = -1;
  std::vector<const Graph*> graphs;
};

Maximizers coemax_maximizers(int n, int m, const Proportion& r) {
  const Threshold t = Threshold::of(r, n);
  Maximizers out;
  for (const Graph& g : catalog_for(n).classes(m)) {
    const auto v = copec_value(g, t);
    if (!v) throw std::domain_error("edge statistic undefined for floor(r*n) = 0");
    if (*v > out.value) {
      out.value = *v;
      out.graphs.clear();
    }
    if (*v == out.value) out.graphs.push_back(&g);
  }
  return out;
}

// True when V splits into k blocks of order n/k, each inducing a connected
// subgraph, with exactly `cut` edges between blocks.
bool has_connected_balanced_split(const Graph& g, int k, int cut) {
  const int n = g.order();
  const int size = n / k;
  std::vector<VertexMask> blocks;
  auto connected = [&](VertexMask block) { return component_masks(g, block).size() == 1; };
  auto crossing = [&] {
    int internal = 0;
    for (VertexMask b : blocks)
      for (int v = 0; v < n; ++v)
        if (b & bit(v)) internal += std::popcount(g.neighbors(v) & b);
    return g.size() - internal / 2;
  };
  auto place = [&](auto&& self, VertexMask rest) -> bool {
    if (rest == 0) return crossing() == cut;
    // The lowest unplaced vertex anchors the next block, so each split is visited once.
    const int anchor = std::countr_zero(rest);
    const VertexMask others = rest & ~bit(anchor);
    for (VertexMask sub = others;; sub = (sub - 1) & others) {
      if (std::popcount(sub) == size - 1) {
        const VertexMask block = sub | bit(anchor);
        if (connected(block)) {
          blocks.push_back(block);
          if (self(self, rest & ~block)) return true;
          blocks.pop_back();
        }
      }
      if (sub == 0) break;
    }
    return false;
  };
  return place(place, g.all_vertices());
}

}  // namespace

ConjectureVerdict check_equal_partition_conjecture(int n, int m, int k) {
  check_conjecture_size(n, m);
  if (k < 2 || n % k != 0) {
    throw std::invalid_argument("equal-partition check needs k >= 2 dividing n");
  }
  const Proportion r(1, k);
  const Maximizers best = coemax_maximizers(n, m, r);

  ConjectureVerdict v;
  v.name = "equal_partition";
  v.n = n;
  v.m = m;
  v.r = r;
  v.lhs = Fraction::of(best.value, 1);
  int closest = -1;
  int admitting = 0;
  int connected_blocks = 0;
  for (const Graph* g : best.graphs) {
    const int cut = *balanced_partition_cut(*g, k);
    if (closest < 0 || cut < closest) closest = cut;
    if (cut == best.value) {
      if (!v.witness) v.witness = *g;
      ++admitting;
      connected_blocks += has_connected_balanced_split(*g, k, cut);
    }
  }
  v.rhs = Fraction::of(closest, 1);
  v.holds = admitting > 0;
  if (!v.holds) v.witness = *best.graphs.front();
  v.details = std::to_string(best.graphs.size()) + " maximizer class(es), " +
              std::to_string(admitting) + " with a balanced minimum failure state, " +
              std::to_string(connected_blocks) + " where the " + std::to_string(k) +
              " blocks are themselves connected";
  return v;
}

ConjectureVerdict check_coemax_upper_bound(int n, int m) {
  check_conjecture_size(n, m);
  if (n % 2 != 0) throw std::invalid_argument("coemax bound applies to even n only");
  const Proportion r(1, 2);
  const Maximizers best = coemax_maximizers(n, m, r);

  ConjectureVerdict v;
  v.name = "coemax_upper_bound";
  v.n = n;
  v.m = m;
  v.r = r;
  v.lhs = Fraction::of(best.value, 1);
  v.rhs = Fraction::of(6 * static_cast<std::int64_t>(m) + 7 * n, 12);  // m/2 + 7n/12
  v.holds = 12 * static_cast<std::int64_t>(best.value) <= 6 * static_cast<std::int64_t>(m) + 7 * n;
  v.witness = *best.graphs.front();
  v.details = std::to_string(best.graphs.size()) + " maximizer class(es)";
  return v;
}

bool bipartite_complement_duality_check(const Graph& g) {
  const int n = g.order();
  if (n % 2 != 0) throw std::invalid_argument("duality check needs even order");
  if (n > 16) throw std::invalid_argument("duality check supports at most 16 vertices");
  if (n == 0) return true;
  const Graph h = complement(g);
  const int half = n / 2;
  const int target = half * half;
  // Balanced sides containing vertex 0 cover every unordered bipartition once.
  for (VertexMask side = 1; side < bit(n); side += 2) {
    if (std::popcount(side) != half) continue;
    if (crossing_edges(g, side) + crossing_edges(h, side) != target) return false;
  }
  return true;
}

}  // namespace copc
