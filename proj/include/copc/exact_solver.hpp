#pragma once

#include <optional>
#include <vector>

#include "copc/graph.hpp"
#include "copc/proportion.hpp"

namespace copc {

enum class DisconnectKind { vertex, edge };

/// A minimum disconnecting set together with its size. `cardinality` is absent
/// when no edge set can produce a failure state (tau = 0 on a nonempty graph).
struct DisconnectingWitness {
  DisconnectKind kind = DisconnectKind::vertex;
  std::vector<int> vertices;  // sorted, original labels
  std::vector<Edge> edges;    // sorted
  std::optional<int> cardinality;

  bool feasible() const { return cardinality.has_value(); }
};

/// CO_v^r(g): the lexicographically smallest minimum vertex disconnecting set.
/// The threshold is floor(r * |g|).
DisconnectingWitness copvc_exact(const Graph& g, const Proportion& r);

/// CO_e^r(g): the lexicographically smallest minimum edge disconnecting set.
DisconnectingWitness copec_exact(const Graph& g, const Proportion& r);

/// Value-only variants taking an explicit threshold; used by the family sweeps.
int copvc_value(const Graph& g, const Threshold& t);
std::optional<int> copec_value(const Graph& g, const Threshold& t);

/// Checks a witness by performing the removal and testing the failure predicate
/// at floor(r * |g|). Does not share code with the search.
bool verify_witness(const Graph& g, const Proportion& r, const DisconnectingWitness& w);

/// Weighted capacitated partition problem: split the nodes into blocks of total
/// weight at most `capacity` (and at most `max_blocks` blocks), minimizing the
/// total weight of edges whose endpoints land in different blocks.
struct PartitionProblem {
  std::vector<int> weight;
  std::vector<std::vector<int>> edge_weight;  // symmetric, zero diagonal
  int capacity = 0;
  int max_blocks = kMaxVertices;
};

struct PartitionSolution {
  int cut = 0;
  std::vector<int> block_of;  // per node
};

/// Exact branch and bound. Returns nothing when no admissible partition exists.
std::optional<PartitionSolution> min_partition_cut(const PartitionProblem& problem);

}  // namespace copc
