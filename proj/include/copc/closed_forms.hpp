#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "copc/exact_solver.hpp"
#include "copc/graph.hpp"
#include "copc/proportion.hpp"

namespace copc {

enum class GraphClass { path, cycle, complete, complete_bipartite };

const char* to_string(GraphClass c);
GraphClass parse_graph_class(const std::string& text);

struct ClassSpec {
  GraphClass kind = GraphClass::path;
  int n = 1;  // for complete_bipartite, n = a + b
  int a = 0;
  int b = 0;

  static ClassSpec path(int n) { return {GraphClass::path, n, 0, 0}; }
  static ClassSpec cycle(int n) { return {GraphClass::cycle, n, 0, 0}; }
  static ClassSpec complete(int n) { return {GraphClass::complete, n, 0, 0}; }
  static ClassSpec complete_bipartite(int a, int b) { return {GraphClass::complete_bipartite, a + b, a, b}; }

  /// Throws std::invalid_argument when the parameters are out of range.
  void validate() const;
  Graph build() const;
};

struct FormulaResult {
  std::int64_t value = 0;
  std::string formula_id;
  int tau = 0;
};

/// C(k, 2) with C(0, 2) = C(1, 2) = 0.
constexpr std::int64_t choose2(std::int64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

// Vertex removal.
FormulaResult copvc_path(int n, const Proportion& r);
/// Cycle formula with the threshold taken from n - 1.
FormulaResult copvc_cycle(int n, const Proportion& r);
/// Cycle formula with the threshold taken from the original order n.
FormulaResult copvc_cycle_corrected(int n, const Proportion& r);
FormulaResult copvc_complete(int n, const Proportion& r);
FormulaResult copvc_complete_bipartite(int a, int b, const Proportion& r);

// Edge removal.
FormulaResult copec_path(int n, const Proportion& r);
FormulaResult copec_cycle(int n, const Proportion& r);
/// ceil(n / tau): cutting k edges of C_n leaves exactly k paths.
FormulaResult copec_cycle_corrected(int n, const Proportion& r);
FormulaResult copec_complete(int n, const Proportion& r);

/// One row of a formula-versus-oracle comparison.
struct DiscrepancyEntry {
  ClassSpec spec;
  Proportion r{1, 2};
  DisconnectKind mode = DisconnectKind::vertex;
  int tau = 0;
  std::optional<std::int64_t> formula;    // absent when no formula applies
  std::optional<std::int64_t> corrected;  // cycles only
  std::optional<std::int64_t> oracle;     // absent when infeasible
  std::string formula_id;
  bool proven = true;  // false for cycles and for tau = 0

  bool formula_matches() const { return formula && oracle && *formula == *oracle; }
  bool corrected_matches() const { return corrected && oracle && *corrected == *oracle; }
  /// A proven formula that disagrees with the oracle, or a cycle row where
  /// neither variant agrees.
  bool mismatch() const;
};

/// Builds the concrete graph, evaluates the matching formula(s) and the exact solver.
DiscrepancyEntry formula_vs_oracle(const ClassSpec& spec, const Proportion& r, DisconnectKind mode);

/// Dispatches to the closed form for (class, mode); nothing for K_{a,b} edges.
std::optional<FormulaResult> closed_form(const ClassSpec& spec, const Proportion& r,
                                         DisconnectKind mode);

}  // namespace copc
