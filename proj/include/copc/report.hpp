#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "copc/bipartite.hpp"
#include "copc/closed_forms.hpp"
#include "copc/exact_solver.hpp"
#include "copc/extremal.hpp"

namespace copc {

using json = nlohmann::json;

/// Sorted vertex labels, or [[u, v], ...] edge pairs.
json witness_json(const DisconnectingWitness& w);
json discrepancy_json(const DiscrepancyEntry& e);

/// {name, n, m, r, holds, lhs, rhs, witness_graph6, details}; quantities are
/// exact fraction strings.
json verdict_json(const ConjectureVerdict& v);
ConjectureVerdict verdict_from_json(const json& j);

/// A report object: {command, inputs, value, witness, method, discrepancies}.
json make_report(const std::string& command, json inputs);

/// Throws std::invalid_argument naming the first field that violates the
/// report layout.
void validate_report(const json& report);
void validate_verdict(const json& verdict);

inline constexpr const char* kScanCsvHeader = "n,m,r,stat,value,method,witness_graph6";
std::string scan_csv_row(const ExtremalResult& row, bool with_witness);

}  // namespace copc
