#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "copc/graph.hpp"

namespace copc {

/// Raised for malformed edge-list or graph6 input; the message names the line
/// or character at fault.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge-list document: a header "n <count>" followed by "u v" lines. Blank
/// lines and lines starting with '#' are ignored. Isolated vertices are
/// allowed; self-loops, duplicates and out-of-range endpoints are not.
Graph parse_edge_list(std::string_view text);

/// Canonical edge-list: header, then one "u v" line per edge with u < v in
/// lexicographic order.
std::string to_edge_list(const Graph& g);

/// graph6 for orders 0..62: one order byte, then the upper triangle read column
/// by column, six bits per printable character offset by 63.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

}  // namespace copc
