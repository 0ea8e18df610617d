#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copc/enumeration.hpp"
#include "copc/graph.hpp"
#include "copc/proportion.hpp"

namespace copc {

/// n = p * tau + q with 0 <= q < tau, tau = floor(r n).
struct PQDecomposition {
  int n = 0;
  int tau = 0;
  int p = 0;
  int q = 0;

  /// Throws std::domain_error when tau = 0.
  static PQDecomposition of(int n, const Proportion& r);
  /// Same decomposition of `order` against a fixed tau.
  static PQDecomposition with_tau(int order, int tau);
};

enum class FamilyStat { covmin, coemin, covmax, coemax };
enum class ExtremalMethod { formula, tail, enumeration };

const char* to_string(FamilyStat s);
const char* to_string(ExtremalMethod m);
FamilyStat parse_family_stat(const std::string& text);
bool is_edge_stat(FamilyStat s);
bool is_max_stat(FamilyStat s);

struct ExtremalResult {
  FamilyStat stat = FamilyStat::covmin;
  int n = 0;
  int m = 0;
  Proportion r{1, 2};
  std::int64_t value = 0;
  ExtremalMethod method = ExtremalMethod::formula;
  std::optional<Graph> witness;
};

/// Edge count of the densest failure state of order n: p C(tau,2) + C(q,2).
std::int64_t max_failure_edges(int n, const Proportion& r);

/// p disjoint copies of K_tau followed by one K_q.
Graph build_max_failure_state(int n, const Proportion& r);

/// f(k) = k(n-k) + C(k,2) + p' C(tau,2) + C(q',2), with n - k = p' tau + q'.
/// Valid for 0 <= k <= n - tau.
std::int64_t covmin_threshold_f(int k, int n, const Proportion& r);

/// The graph realizing f(k): k universal vertices joined to a densest failure
/// state on the remaining n - k vertices (tau still taken from n).
Graph build_covmin_extremal(int k, int n, const Proportion& r);

/// Minimum CO_v over G(n, m) by inverting the f(k) thresholds.
ExtremalResult covmin(int n, int m, const Proportion& r);

/// The alternative piecewise characterization (A, B, C_{i,j} labels) evaluated
/// case by case, first matching case wins. Nothing when no case applies.
/// Kept only for cross-checking against covmin.
std::optional<std::int64_t> covmin_piecewise_crosscheck(int n, int m, const Proportion& r);

/// max(0, m - max_failure_edges(n, r)).
ExtremalResult coemin(int n, int m, const Proportion& r);

/// 0 for m < tau; n - tau for C(n,2) - tau < m <= C(n,2); unknown otherwise.
std::optional<std::int64_t> covmax_tail(int n, int m, const Proportion& r);

/// 0 for m < tau; C(n,2) - max_failure_edges for m = C(n,2); unknown otherwise.
std::optional<std::int64_t> coemax_tail(int n, int m, const Proportion& r);

/// K_n minus two vertex-disjoint edges {0,1} and {2,3}.
Graph complete_minus_disjoint_edges(int n);

/// Ground truth over isomorphism classes of G(n, m), n <= 8. The witness is the
/// first optimal representative in canonical-code order.
ExtremalResult extremal_by_enumeration(int n, int m, const Proportion& r, FamilyStat stat);

/// extremal_by_enumeration for every m in 0..C(n,2), reusing one catalog.
std::vector<ExtremalResult> extremal_profile(int n, const Proportion& r, FamilyStat stat);

}  // namespace copc
