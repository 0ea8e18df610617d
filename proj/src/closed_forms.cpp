#include "copc/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "copc/exact_solver.hpp"

namespace copc {

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::path: return "path";
    case GraphClass::cycle: return "cycle";
    case GraphClass::complete: return "complete";
    case GraphClass::complete_bipartite: return "complete-bipartite";
  }
  return "?";
}

GraphClass parse_graph_class(const std::string& text) {
  if (text == "path") return GraphClass::path;
  if (text == "cycle") return GraphClass::cycle;
  if (text == "complete") return GraphClass::complete;
  if (text == "complete-bipartite") return GraphClass::complete_bipartite;
  throw std::invalid_argument("unknown graph class '" + text + "'");
}

void ClassSpec::validate() const {
  switch (kind) {
    case GraphClass::path:
    case GraphClass::complete:
      if (n < 1) throw std::invalid_argument("order must be at least 1");
      break;
    case GraphClass::cycle:
      if (n < 3) throw std::invalid_argument("cycle order must be at least 3");
      break;
    case GraphClass::complete_bipartite:
      if (a < 1 || a > b) throw std::invalid_argument("complete bipartite needs 1 <= a <= b");
      if (n != a + b) throw std::invalid_argument("complete bipartite order must be a + b");
      break;
  }
}

Graph ClassSpec::build() const {
  validate();
  switch (kind) {
    case GraphClass::path: return Graph::path(n);
    case GraphClass::cycle: return Graph::cycle(n);
    case GraphClass::complete: return Graph::complete(n);
    case GraphClass::complete_bipartite: return Graph::complete_bipartite(a, b);
  }
  return {};
}

namespace {

int tau_of(const Proportion& r, int n) { return static_cast<int>(r.floor_times(n)); }

int positive_tau(const Proportion& r, int n, const char* id) {
  const int tau = tau_of(r, n);
  if (tau < 1) {
    throw std::domain_error(std::string(id) + ": floor(r*n) = 0 for n = " + std::to_string(n) +
                            ", r = " + r.to_string());
  }
  return tau;
}

void require_order(int n, int minimum) {
  if (n < minimum) throw std::invalid_argument("order " + std::to_string(n) + " too small");
}

}  // namespace

FormulaResult copvc_path(int n, const Proportion& r) {
  require_order(n, 1);
  const int tau = positive_tau(r, n, "copvc_path");
  return {n / (tau + 1), "copvc_path", tau};
}

FormulaResult copvc_cycle(int n, const Proportion& r) {
  require_order(n, 3);
  const int tau = positive_tau(r, n, "copvc_cycle");
  // Threshold measured on the path left after the first removal, floor(r(n-1)).
  const int shifted = tau_of(r, n - 1);
  return {(n - 1) / (shifted + 1) + 1, "copvc_cycle", tau};
}

FormulaResult copvc_cycle_corrected(int n, const Proportion& r) {
  require_order(n, 3);
  const int tau = positive_tau(r, n, "copvc_cycle_corrected");
  return {(n - 1) / (tau + 1) + 1, "copvc_cycle_corrected", tau};
}

FormulaResult copvc_complete(int n, const Proportion& r) {
  require_order(n, 1);
  const int tau = tau_of(r, n);
  return {n - tau, "copvc_complete", tau};
}

FormulaResult copvc_complete_bipartite(int a, int b, const Proportion& r) {
  if (a < 1 || a > b) throw std::invalid_argument("complete bipartite needs 1 <= a <= b");
  const int tau = tau_of(r, a + b);
  return {std::min(a, a + b - tau), "copvc_complete_bipartite", tau};
}

FormulaResult copec_path(int n, const Proportion& r) {
  require_order(n, 1);
  const int tau = positive_tau(r, n, "copec_path");
  return {(n - 1) / tau, "copec_path", tau};
}

FormulaResult copec_cycle(int n, const Proportion& r) {
  require_order(n, 3);
  const int tau = positive_tau(r, n, "copec_cycle");
  return {(n - 1) / tau + 1, "copec_cycle", tau};
}

FormulaResult copec_cycle_corrected(int n, const Proportion& r) {
  require_order(n, 3);
  const int tau = positive_tau(r, n, "copec_cycle_corrected");
  return {(n + tau - 1) / tau, "copec_cycle_corrected", tau};
}

FormulaResult copec_complete(int n, const Proportion& r) {
  require_order(n, 1);
  const int tau = positive_tau(r, n, "copec_complete");
  const std::int64_t p = n / tau;
  const std::int64_t q = n % tau;
  return {choose2(n) - p * choose2(tau) - choose2(q), "copec_complete", tau};
}

std::optional<FormulaResult> closed_form(const ClassSpec& spec, const Proportion& r,
                                         DisconnectKind mode) {
  spec.validate();
  const bool vertex = mode == DisconnectKind::vertex;
  switch (spec.kind) {
    case GraphClass::path: return vertex ? copvc_path(spec.n, r) : copec_path(spec.n, r);
    case GraphClass::cycle: return vertex ? copvc_cycle(spec.n, r) : copec_cycle(spec.n, r);
    case GraphClass::complete: return vertex ? copvc_complete(spec.n, r) : copec_complete(spec.n, r);
    case GraphClass::complete_bipartite:
      if (vertex) return copvc_complete_bipartite(spec.a, spec.b, r);
      return std::nullopt;
  }
  return std::nullopt;
}

bool DiscrepancyEntry::mismatch() const {
  if (!oracle || !formula) return false;
  if (proven) return !formula_matches();
  return !formula_matches() && !corrected_matches();
}

DiscrepancyEntry formula_vs_oracle(const ClassSpec& spec, const Proportion& r, DisconnectKind mode) {
  DiscrepancyEntry entry;
  entry.spec = spec;
  entry.r = r;
  entry.mode = mode;
  entry.tau = tau_of(r, spec.n);
  // Below tau = 1 every vertex has to go, which lies outside the proven range.
  entry.proven = spec.kind != GraphClass::cycle && entry.tau >= 1;

  const Graph g = spec.build();
  const Threshold t = Threshold::of(r, g.order());
  if (mode == DisconnectKind::vertex) {
    entry.oracle = copvc_value(g, t);
  } else {
    entry.oracle = copec_value(g, t);
  }

  if (entry.tau >= 1 || (mode == DisconnectKind::vertex && spec.kind != GraphClass::path &&
                         spec.kind != GraphClass::cycle)) {
    if (const auto f = closed_form(spec, r, mode)) {
      entry.formula = f->value;
      entry.formula_id = f->formula_id;
    }
    if (spec.kind == GraphClass::cycle) {
      entry.corrected = mode == DisconnectKind::vertex ? copvc_cycle_corrected(spec.n, r).value
                                                       : copec_cycle_corrected(spec.n, r).value;
    }
  }
  return entry;
}

}  // namespace copc
