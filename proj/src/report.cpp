#include "copc/report.hpp"

#include <charconv>
#include <stdexcept>

#include "copc/io.hpp"

namespace copc {

json witness_json(const DisconnectingWitness& w) {
  if (w.kind == DisconnectKind::vertex) return json(w.vertices);
  json pairs = json::array();
  for (const Edge& e : w.edges) pairs.push_back({e.u, e.v});
  return pairs;
}

namespace {

json optional_number(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

const char* mode_name(DisconnectKind k) { return k == DisconnectKind::vertex ? "vertex" : "edge"; }

Fraction parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  auto read = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw std::invalid_argument("invalid fraction '" + s + "'");
    }
    return v;
  };
  const std::string_view view(s);
  if (slash == std::string::npos) return Fraction::of(read(view), 1);
  return Fraction::of(read(view.substr(0, slash)), read(view.substr(slash + 1)));
}

void require(const json& j, const char* key, bool ok) {
  if (!j.contains(key) || !ok) throw std::invalid_argument(std::string("report field '") + key + "' missing or mistyped");
}

}  // namespace

json discrepancy_json(const DiscrepancyEntry& e) {
  json j;
  j["class"] = to_string(e.spec.kind);
  j["n"] = e.spec.n;
  if (e.spec.kind == GraphClass::complete_bipartite) {
    j["a"] = e.spec.a;
    j["b"] = e.spec.b;
  }
  j["r"] = e.r.to_string();
  j["mode"] = mode_name(e.mode);
  j["tau"] = e.tau;
  j["formula_id"] = e.formula_id;
  j["formula"] = optional_number(e.formula);
  j["corrected"] = optional_number(e.corrected);
  j["oracle"] = optional_number(e.oracle);
  j["proven"] = e.proven;
  j["mismatch"] = e.mismatch();
  return j;
}

json verdict_json(const ConjectureVerdict& v) {
  json j;
  j["name"] = v.name;
  j["n"] = v.n;
  j["m"] = v.m;
  j["r"] = v.r.to_string();
  j["holds"] = v.holds;
  j["lhs"] = v.lhs.to_string();
  j["rhs"] = v.rhs.to_string();
  j["witness_graph6"] = v.witness ? json(to_graph6(*v.witness)) : json(nullptr);
  j["details"] = v.details;
  return j;
}

ConjectureVerdict verdict_from_json(const json& j) {
  validate_verdict(j);
  ConjectureVerdict v;
  v.name = j.at("name").get<std::string>();
  v.n = j.at("n").get<int>();
  v.m = j.at("m").get<int>();
  v.r = Proportion::parse(j.at("r").get<std::string>());
  v.holds = j.at("holds").get<bool>();
  v.lhs = parse_fraction(j.at("lhs").get<std::string>());
  v.rhs = parse_fraction(j.at("rhs").get<std::string>());
  if (!j.at("witness_graph6").is_null()) v.witness = parse_graph6(j.at("witness_graph6").get<std::string>());
  v.details = j.value("details", "");
  return v;
}

json make_report(const std::string& command, json inputs) {
  json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["value"] = nullptr;
  j["witness"] = nullptr;
  j["method"] = nullptr;
  j["discrepancies"] = json::array();
  return j;
}

void validate_report(const json& report) {
  if (!report.is_object()) throw std::invalid_argument("report is not an object");
  require(report, "command", report.contains("command") && report["command"].is_string());
  require(report, "inputs", report.contains("inputs") && report["inputs"].is_object());
  require(report, "value", report.contains("value") &&
                               (report["value"].is_number_integer() || report["value"].is_null()));
  require(report, "witness", report.contains("witness"));
  require(report, "method", report.contains("method") &&
                                (report["method"].is_string() || report["method"].is_null()));
  require(report, "discrepancies",
          report.contains("discrepancies") && report["discrepancies"].is_array());
  const json& inputs = report["inputs"];
  if (inputs.contains("r")) {
    if (!inputs["r"].is_string()) throw std::invalid_argument("inputs.r must be a fraction string");
    Proportion::parse(inputs["r"].get<std::string>());
  }
}

void validate_verdict(const json& v) {
  if (!v.is_object()) throw std::invalid_argument("verdict is not an object");
  require(v, "name", v.contains("name") && v["name"].is_string());
  require(v, "n", v.contains("n") && v["n"].is_number_integer());
  require(v, "m", v.contains("m") && v["m"].is_number_integer());
  require(v, "r", v.contains("r") && v["r"].is_string());
  require(v, "holds", v.contains("holds") && v["holds"].is_boolean());
  require(v, "lhs", v.contains("lhs") && v["lhs"].is_string());
  require(v, "rhs", v.contains("rhs") && v["rhs"].is_string());
  require(v, "witness_graph6", v.contains("witness_graph6") &&
                                   (v["witness_graph6"].is_string() || v["witness_graph6"].is_null()));
}

std::string scan_csv_row(const ExtremalResult& row, bool with_witness) {
  std::string out = std::to_string(row.n) + "," + std::to_string(row.m) + "," + row.r.to_string() +
                    "," + to_string(row.stat) + "," + std::to_string(row.value) + "," +
                    to_string(row.method) + ",";
  if (with_witness && row.witness) out += to_graph6(*row.witness);
  return out;
}

}  // namespace copc
