#include "copc/extremal.hpp"

#include <algorithm>
#include <stdexcept>

#include "copc/closed_forms.hpp"
#include "copc/exact_solver.hpp"

namespace copc {

PQDecomposition PQDecomposition::with_tau(int order, int tau) {
  if (tau < 1) throw std::domain_error("p/q decomposition needs floor(r*n) >= 1");
  return {order, tau, order / tau, order % tau};
}

PQDecomposition PQDecomposition::of(int n, const Proportion& r) {
  if (n < 0) throw std::invalid_argument("negative order");
  return with_tau(n, static_cast<int>(r.floor_times(n)));
}

const char* to_string(FamilyStat s) {
  switch (s) {
    case FamilyStat::covmin: return "covmin";
    case FamilyStat::coemin: return "coemin";
    case FamilyStat::covmax: return "covmax";
    case FamilyStat::coemax: return "coemax";
  }
  return "?";
}

const char* to_string(ExtremalMethod m) {
  switch (m) {
    case ExtremalMethod::formula: return "formula";
    case ExtremalMethod::tail: return "tail";
    case ExtremalMethod::enumeration: return "enumeration";
  }
  return "?";
}

FamilyStat parse_family_stat(const std::string& text) {
  if (text == "covmin") return FamilyStat::covmin;
  if (text == "coemin") return FamilyStat::coemin;
  if (text == "covmax") return FamilyStat::covmax;
  if (text == "coemax") return FamilyStat::coemax;
  throw std::invalid_argument("unknown statistic '" + text + "'");
}

bool is_edge_stat(FamilyStat s) { return s == FamilyStat::coemin || s == FamilyStat::coemax; }
bool is_max_stat(FamilyStat s) { return s == FamilyStat::covmax || s == FamilyStat::coemax; }

namespace {

// Canonical labels where the enumeration can compute them.
Graph stable_witness(const Graph& g) {
  return g.order() <= kMaxEnumerationOrder ? canonical_form(g) : g;
}

void check_size(int n, int m) {
  if (n < 1) throw std::invalid_argument("order must be at least 1");
  if (m < 0 || m > choose2(n)) {
    throw std::invalid_argument("edge count " + std::to_string(m) + " outside [0, " +
                                std::to_string(choose2(n)) + "]");
  }
}

std::int64_t densest_failure_edges(const PQDecomposition& d) {
  return d.p * choose2(d.tau) + choose2(d.q);
}

// Cliques of order tau (and a final one of order q) on `order` vertices
// starting at label `first`.
void add_failure_cliques(std::vector<Edge>& edges, int first, int order, int tau) {
  for (int start = first; start < first + order; start += tau) {
    const int end = std::min(start + tau, first + order);
    for (int u = start; u < end; ++u)
      for (int v = u + 1; v < end; ++v) edges.emplace_back(u, v);
  }
}

}  // namespace

std::int64_t max_failure_edges(int n, const Proportion& r) {
  return densest_failure_edges(PQDecomposition::of(n, r));
}

// p copies of K_tau followed by K_q (not tau copies of K_p).
Graph build_max_failure_state(int n, const Proportion& r) {
  const auto d = PQDecomposition::of(n, r);
  std::vector<Edge> edges;
  add_failure_cliques(edges, 0, n, d.tau);
  return Graph(n, edges);
}

std::int64_t covmin_threshold_f(int k, int n, const Proportion& r) {
  const auto d = PQDecomposition::of(n, r);
  if (k < 0 || k > n - d.tau) {
    throw std::out_of_range("k = " + std::to_string(k) + " outside [0, n - floor(rn)] = [0, " +
                            std::to_string(n - d.tau) + "]");
  }
  const auto rest = PQDecomposition::with_tau(n - k, d.tau);
  return static_cast<std::int64_t>(k) * (n - k) + choose2(k) + densest_failure_edges(rest);
}

Graph build_covmin_extremal(int k, int n, const Proportion& r) {
  const auto d = PQDecomposition::of(n, r);
  if (k < 0 || k > n - d.tau) throw std::out_of_range("k outside [0, n - floor(rn)]");
  std::vector<Edge> edges;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  add_failure_cliques(edges, k, n - k, d.tau);
  return Graph(n, edges);
}

ExtremalResult covmin(int n, int m, const Proportion& r) {
  check_size(n, m);
  const auto d = PQDecomposition::of(n, r);
  ExtremalResult result{FamilyStat::covmin, n, m, r, 0, ExtremalMethod::formula, std::nullopt};
  if (m <= covmin_threshold_f(0, n, r)) {
    if (m == covmin_threshold_f(0, n, r)) result.witness = stable_witness(build_covmin_extremal(0, n, r));
    return result;
  }
  for (int k = 1; k <= n - d.tau; ++k) {
    const std::int64_t fk = covmin_threshold_f(k, n, r);
    if (m <= fk) {
      result.value = k;
      if (m == fk) result.witness = stable_witness(build_covmin_extremal(k, n, r));
      return result;
    }
  }
  // f(n - tau) = C(n, 2), so the scan always terminates above.
  throw std::logic_error("covmin threshold scan did not terminate");
}

std::optional<std::int64_t> covmin_piecewise_crosscheck(int n, int m, const Proportion& r) {
  check_size(n, m);
  const auto d = PQDecomposition::of(n, r);
  const std::int64_t tau = d.tau;
  const std::int64_t p = d.p;
  const std::int64_t q = d.q;
  const std::int64_t a = densest_failure_edges(d);
  const std::int64_t b = a + q * p * tau;
  auto c = [&](std::int64_t i, std::int64_t j) {
    std::int64_t sum = 0;
    for (std::int64_t t = 1; t <= i - 1; ++t) sum += tau * tau * (p - t);
    return sum + (j - 1) * tau * (p - i) + b;
  };

  if (m <= a) return 0;
  for (std::int64_t t = 1; t <= q; ++t)
    if (a + t * p * tau < m && m <= a + (t + 1) * p * tau) return t;
  for (std::int64_t i = 1; i <= p - 1; ++i)
    for (std::int64_t j = 1; j < tau; ++j)
      if (c(i, j) < m && m <= c(i, j + 1)) return (i - 1) * tau + j + q;
  for (std::int64_t i = 1; i <= p - 1; ++i)
    if (c(i, tau) < m && m <= c(i + 1, 1)) return (i - 1) * tau + tau + q;
  if (c(p, 1) <= m) return (p - 1) * tau + q;
  return std::nullopt;
}

ExtremalResult coemin(int n, int m, const Proportion& r) {
  check_size(n, m);
  const std::int64_t dense = max_failure_edges(n, r);
  ExtremalResult result{FamilyStat::coemin, n, m, r, 0, ExtremalMethod::formula, std::nullopt};
  result.value = m > dense ? m - dense : 0;
  return result;
}

std::optional<std::int64_t> covmax_tail(int n, int m, const Proportion& r) {
  check_size(n, m);
  const int tau = static_cast<int>(r.floor_times(n));
  if (m < tau) return 0;
  if (m > choose2(n) - tau) return n - tau;
  return std::nullopt;
}

std::optional<std::int64_t> coemax_tail(int n, int m, const Proportion& r) {
  check_size(n, m);
  const int tau = static_cast<int>(r.floor_times(n));
  if (m < tau) return 0;
  if (m == choose2(n)) return choose2(n) - max_failure_edges(n, r);
  return std::nullopt;
}

Graph complete_minus_disjoint_edges(int n) {
  if (n < 4) throw std::invalid_argument("two disjoint edges need at least 4 vertices");
  return Graph::complete(n).without_edge(0, 1).without_edge(2, 3);
}

namespace {

int stat_value(const Graph& g, const Threshold& t, FamilyStat stat) {
  if (!is_edge_stat(stat)) return copvc_value(g, t);
  const auto v = copec_value(g, t);
  if (!v) throw std::domain_error("edge statistic undefined for floor(r*n) = 0");
  return *v;
}

ExtremalResult reduce_level(const std::vector<Graph>& level, int n, int m, const Proportion& r,
                            FamilyStat stat) {
  const Threshold t = Threshold::of(r, n);
  if (is_edge_stat(stat) && t.tau < 1) {
    throw std::domain_error("edge statistic undefined for floor(r*n) = 0");
  }
  ExtremalResult result{stat, n, m, r, 0, ExtremalMethod::enumeration, std::nullopt};
  const bool want_max = is_max_stat(stat);
  for (const Graph& g : level) {
    const int v = stat_value(g, t, stat);
    const bool better = !result.witness || (want_max ? v > result.value : v < result.value);
    if (better) {
      result.value = v;
      result.witness = g;
    }
  }
  return result;
}

}  // namespace

ExtremalResult extremal_by_enumeration(int n, int m, const Proportion& r, FamilyStat stat) {
  check_size(n, m);
  return reduce_level(catalog_for(n).classes(m), n, m, r, stat);
}

std::vector<ExtremalResult> extremal_profile(int n, const Proportion& r, FamilyStat stat) {
  const GraphCatalog& catalog = catalog_for(n);
  std::vector<ExtremalResult> out;
  for (int m = 0; m <= catalog.max_size(); ++m) out.push_back(reduce_level(catalog.classes(m), n, m, r, stat));
  return out;
}

}  // namespace copc
