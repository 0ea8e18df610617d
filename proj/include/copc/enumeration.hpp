#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "copc/graph.hpp"

namespace copc {

inline constexpr int kMaxEnumerationOrder = 8;

/// Canonical adjacency code for graphs of order <= 8: the minimum, over vertex
/// orderings, of the upper-triangle bit string read column by column (the
/// graph6 bit order), most significant bit first. Orderings are restricted to
/// those compatible with an isomorphism-invariant colour refinement, so the
/// minimum is still a graph invariant.
std::uint64_t canonical_code(const Graph& g);

/// The relabeling of g that attains canonical_code.
Graph canonical_form(const Graph& g);

/// One representative (in canonical form) per isomorphism class of graphs with
/// n vertices, for every size 0..C(n,2). Representatives within a size are
/// sorted by canonical code.
class GraphCatalog {
 public:
  explicit GraphCatalog(int n);

  int order() const { return n_; }
  int max_size() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<Graph>& classes(int m) const;
  std::size_t total() const;

 private:
  int n_;
  std::vector<std::vector<Graph>> levels_;
};

/// Shared, lazily built catalog; safe to call from several threads.
const GraphCatalog& catalog_for(int n);

/// Isomorphism-class representatives of G(n, m).
std::vector<Graph> enumerate_gnm(int n, int m);
void for_each_gnm(int n, int m, const std::function<void(const Graph&)>& visit);

}  // namespace copc
