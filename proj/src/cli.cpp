#include "copc/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "copc/bipartite.hpp"
#include "copc/closed_forms.hpp"
#include "copc/enumeration.hpp"
#include "copc/exact_solver.hpp"
#include "copc/extremal.hpp"
#include "copc/io.hpp"
#include "copc/report.hpp"

namespace copc {

namespace {

// Signals an infeasible edge disconnection so it maps to its own exit code.
struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DisconnectKind parse_mode(const std::string& s) {
  if (s == "vertex") return DisconnectKind::vertex;
  if (s == "edge") return DisconnectKind::edge;
  throw std::invalid_argument("mode must be vertex or edge, got '" + s + "'");
}

std::vector<Proportion> parse_grid(const std::string& list) {
  std::vector<Proportion> grid;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) grid.push_back(Proportion::parse(item));
  }
  if (grid.empty()) throw std::invalid_argument("empty r grid");
  return grid;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  // A document whose first meaningful line is not an "n" header is read as graph6.
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    if (line[start] == 'n' && (line.size() == start + 1 || line[start + 1] == ' ' || line[start + 1] == '\t')) {
      return parse_edge_list(text);
    }
    return parse_graph6(line);
  }
  return parse_edge_list(text);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string graph;
  std::string r;
  std::string mode;
  bool witness = false;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  const Proportion r = Proportion::parse(a.r);
  const DisconnectKind mode = parse_mode(a.mode);
  const DisconnectingWitness w = mode == DisconnectKind::vertex ? copvc_exact(g, r) : copec_exact(g, r);

  json inputs{{"n", g.order()}, {"m", g.size()}, {"r", r.to_string()}, {"file", a.graph},
              {"mode", a.mode}, {"tau", Threshold::of(r, g.order()).tau}};
  json report = make_report("compute", std::move(inputs));
  report["method"] = "exact";
  report["feasible"] = w.feasible();
  if (w.feasible()) report["value"] = *w.cardinality;
  if (a.witness && w.feasible()) report["witness"] = witness_json(w);
  emit(out, report);
  return w.feasible() ? kExitOk : kExitInfeasible;
}

// ---------------------------------------------------------------------------

struct FormulaArgs {
  std::string cls;
  int n = 0;
  int a = 0;
  int b = 0;
  std::string r;
  std::string mode;
};

int cmd_formula(const FormulaArgs& args, std::ostream& out) {
  const GraphClass cls = parse_graph_class(args.cls);
  const Proportion r = Proportion::parse(args.r);
  const DisconnectKind mode = parse_mode(args.mode);
  ClassSpec spec;
  if (cls == GraphClass::complete_bipartite) {
    spec = ClassSpec::complete_bipartite(args.a, args.b);
  } else {
    spec = ClassSpec{cls, args.n, 0, 0};
  }
  spec.validate();
  const int tau = static_cast<int>(r.floor_times(spec.n));
  if (mode == DisconnectKind::edge && tau == 0) {
    throw Infeasible("floor(r*n) = 0: no edge set produces a failure state");
  }
  const auto result = closed_form(spec, r, mode);
  if (!result) throw std::invalid_argument("no closed form for complete-bipartite edge removal; use compute");

  json inputs{{"class", args.cls}, {"n", spec.n}, {"r", r.to_string()}, {"mode", args.mode}, {"tau", tau}};
  if (cls == GraphClass::complete_bipartite) {
    inputs["a"] = spec.a;
    inputs["b"] = spec.b;
  }
  json report = make_report("formula", std::move(inputs));
  report["value"] = result->value;
  report["method"] = "formula";
  report["formula_id"] = result->formula_id;
  if (cls == GraphClass::cycle) {
    report["corrected_value"] = mode == DisconnectKind::vertex ? copvc_cycle_corrected(spec.n, r).value
                                                               : copec_cycle_corrected(spec.n, r).value;
  }
  emit(out, report);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ExtremalArgs {
  int n = 0;
  int m = 0;
  std::string r;
  std::string stat;
  bool enumerate = false;
};

std::optional<ExtremalResult> theorem_value(int n, int m, const Proportion& r, FamilyStat stat) {
  switch (stat) {
    case FamilyStat::covmin: return covmin(n, m, r);
    case FamilyStat::coemin: return coemin(n, m, r);
    case FamilyStat::covmax:
    case FamilyStat::coemax: {
      const auto tail = stat == FamilyStat::covmax ? covmax_tail(n, m, r) : coemax_tail(n, m, r);
      if (!tail) return std::nullopt;
      return ExtremalResult{stat, n, m, r, *tail, ExtremalMethod::tail, std::nullopt};
    }
  }
  return std::nullopt;
}

void require_tau(int n, const Proportion& r, FamilyStat stat) {
  const int tau = static_cast<int>(r.floor_times(n));
  if (tau == 0) {
    if (is_edge_stat(stat)) throw Infeasible("floor(r*n) = 0: edge statistics are undefined");
    if (stat == FamilyStat::covmin) throw std::domain_error("covmin thresholds need floor(r*n) >= 1");
  }
}

int cmd_extremal(const ExtremalArgs& a, std::ostream& out) {
  const Proportion r = Proportion::parse(a.r);
  const FamilyStat stat = parse_family_stat(a.stat);
  require_tau(a.n, r, stat);
  if (a.n < 1 || a.m < 0 || a.m > choose2(a.n)) throw std::invalid_argument("need n >= 1 and 0 <= m <= C(n,2)");

  const auto theorem = theorem_value(a.n, a.m, r, stat);
  std::optional<ExtremalResult> enumerated;
  if (a.enumerate || !theorem) {
    if (a.n > kMaxEnumerationOrder) {
      throw std::invalid_argument("no closed form here and enumeration is limited to n <= " +
                                  std::to_string(kMaxEnumerationOrder));
    }
    enumerated = extremal_by_enumeration(a.n, a.m, r, stat);
  }

  json inputs{{"n", a.n}, {"m", a.m}, {"r", r.to_string()}, {"stat", a.stat}};
  json report = make_report("extremal", std::move(inputs));
  const ExtremalResult& chosen = enumerated ? *enumerated : *theorem;
  report["value"] = chosen.value;
  report["method"] = to_string(chosen.method);
  if (chosen.witness) report["witness"] = to_graph6(*chosen.witness);
  report["theorem_value"] = theorem ? json(theorem->value) : json(nullptr);
  report["enumeration_value"] = enumerated ? json(enumerated->value) : json(nullptr);
  bool mismatch = false;
  if (theorem && enumerated && theorem->value != enumerated->value) {
    mismatch = true;
    report["discrepancies"].push_back({{"stat", a.stat},
                                       {"m", a.m},
                                       {"theorem", theorem->value},
                                       {"theorem_method", to_string(theorem->method)},
                                       {"enumeration", enumerated->value}});
  }
  emit(out, report);
  return mismatch ? kExitDiscrepancy : kExitOk;
}

// ---------------------------------------------------------------------------

struct ScanArgs {
  int n = 0;
  std::string r;
  std::string stat;
  bool all_m = false;
  bool enumerate = false;
  bool witness = false;
  std::string out_path;
};

int cmd_scan(const ScanArgs& a, std::ostream& out) {
  const Proportion r = Proportion::parse(a.r);
  const FamilyStat stat = parse_family_stat(a.stat);
  if (!a.all_m) throw std::invalid_argument("scan requires --all-m");
  if (a.n < 1) throw std::invalid_argument("need n >= 1");
  require_tau(a.n, r, stat);

  std::vector<ExtremalResult> rows;
  const bool enumerate = a.enumerate || is_max_stat(stat);
  if (enumerate) {
    if (a.n > kMaxEnumerationOrder) {
      throw std::invalid_argument("enumeration is limited to n <= " + std::to_string(kMaxEnumerationOrder));
    }
    rows = extremal_profile(a.n, r, stat);
  } else {
    for (int m = 0; m <= choose2(a.n); ++m) rows.push_back(*theorem_value(a.n, m, r, stat));
  }

  std::ostringstream csv;
  csv << kScanCsvHeader << '\n';
  for (const ExtremalResult& row : rows) csv << scan_csv_row(row, a.witness) << '\n';
  if (a.out_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(a.out_path);
    if (!file) throw std::invalid_argument("cannot write '" + a.out_path + "'");
    file << csv.str();
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  int n_max = 7;
  std::string grid = "1/4,1/3,1/2,2/3,3/4";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto grid = parse_grid(a.grid);
  if (a.n_max < 1) throw std::invalid_argument("n-max must be at least 1");

  json report = make_report("verify", json{{"n_max", a.n_max}, {"r_grid", a.grid}});
  int proven_mismatches = 0;
  int warnings = 0;
  int rows = 0;
  int cycle_rows = 0;
  int cycle_printed = 0;
  int cycle_corrected = 0;

  auto record = [&](const DiscrepancyEntry& e) {
    ++rows;
    if (e.spec.kind == GraphClass::cycle && e.formula) {
      ++cycle_rows;
      cycle_printed += e.formula_matches();
      cycle_corrected += e.corrected_matches();
      if (!e.formula_matches()) {
        ++warnings;
        report["discrepancies"].push_back(discrepancy_json(e));
      }
      return;
    }
    if (e.formula && !e.formula_matches()) {
      ++(e.proven ? proven_mismatches : warnings);
      report["discrepancies"].push_back(discrepancy_json(e));
    }
  };

  for (const Proportion& r : grid) {
    for (int n = 1; n <= a.n_max; ++n) {
      const int tau = static_cast<int>(r.floor_times(n));
      if (tau >= 1) {
        record(formula_vs_oracle(ClassSpec::path(n), r, DisconnectKind::vertex));
        record(formula_vs_oracle(ClassSpec::path(n), r, DisconnectKind::edge));
        record(formula_vs_oracle(ClassSpec::complete(n), r, DisconnectKind::edge));
        if (n >= 3) {
          record(formula_vs_oracle(ClassSpec::cycle(n), r, DisconnectKind::vertex));
          record(formula_vs_oracle(ClassSpec::cycle(n), r, DisconnectKind::edge));
        }
      }
      record(formula_vs_oracle(ClassSpec::complete(n), r, DisconnectKind::vertex));
      for (int x = 1; x <= n / 2; ++x)
        record(formula_vs_oracle(ClassSpec::complete_bipartite(x, n - x), r, DisconnectKind::vertex));
    }
  }

  // Family theorems against enumeration.
  const int family_max = std::min(a.n_max, kMaxEnumerationOrder);
  int family_checks = 0;
  for (const Proportion& r : grid) {
    for (int n = 2; n <= family_max; ++n) {
      if (r.floor_times(n) < 1) continue;
      const GraphCatalog& catalog = catalog_for(n);
      const Threshold t = Threshold::of(r, n);
      std::int64_t densest = 0;
      for (int m = 0; m <= catalog.max_size(); ++m)
        for (const Graph& g : catalog.classes(m))
          if (is_failure_state(g, t)) densest = std::max<std::int64_t>(densest, m);
      ++family_checks;
      if (densest != max_failure_edges(n, r)) {
        ++proven_mismatches;
        report["discrepancies"].push_back({{"check", "max_failure_edges"}, {"n", n}, {"r", r.to_string()},
                                           {"formula", max_failure_edges(n, r)}, {"enumeration", densest}});
      }
      const auto vmin = extremal_profile(n, r, FamilyStat::covmin);
      const auto emin = extremal_profile(n, r, FamilyStat::coemin);
      for (int m = 0; m <= catalog.max_size(); ++m) {
        family_checks += 2;
        const auto fv = covmin(n, m, r).value;
        const auto fe = coemin(n, m, r).value;
        if (fv != vmin[m].value) {
          ++proven_mismatches;
          report["discrepancies"].push_back({{"check", "covmin"}, {"n", n}, {"m", m}, {"r", r.to_string()},
                                             {"formula", fv}, {"enumeration", vmin[m].value}});
        }
        if (fe != emin[m].value) {
          ++proven_mismatches;
          report["discrepancies"].push_back({{"check", "coemin"}, {"n", n}, {"m", m}, {"r", r.to_string()},
                                             {"formula", fe}, {"enumeration", emin[m].value}});
        }
        const auto piecewise = covmin_piecewise_crosscheck(n, m, r);
        if (!piecewise || *piecewise != fv) {
          ++warnings;
          report["discrepancies"].push_back({{"check", "covmin_piecewise"}, {"n", n}, {"m", m},
                                             {"r", r.to_string()},
                                             {"piecewise", piecewise ? json(*piecewise) : json(nullptr)},
                                             {"covmin", fv}, {"proven", false}});
        }
      }
    }
  }

  report["value"] = proven_mismatches;
  report["method"] = "exact";
  report["summary"] = {{"formula_rows", rows},
                       {"family_checks", family_checks},
                       {"proven_mismatches", proven_mismatches},
                       {"warnings", warnings},
                       {"cycle_rows", cycle_rows},
                       {"cycle_printed_form_matches", cycle_printed},
                       {"cycle_corrected_form_matches", cycle_corrected}};
  emit(out, report);
  return proven_mismatches > 0 ? kExitDiscrepancy : kExitOk;
}

// ---------------------------------------------------------------------------

struct ConjectureArgs {
  std::string name;
  int n = 0;
  int m = -1;
  int k = 2;
  bool all_m = false;
};

int cmd_conjecture(const ConjectureArgs& a, std::ostream& out) {
  if (a.name != "equal-partition" && a.name != "coemax-bound") {
    throw std::invalid_argument("unknown conjecture '" + a.name + "'");
  }
  if (a.all_m == (a.m >= 0)) throw std::invalid_argument("give exactly one of --m or --all-m");
  auto check = [&](int m) {
    return a.name == "equal-partition" ? check_equal_partition_conjecture(a.n, m, a.k)
                                       : check_coemax_upper_bound(a.n, m);
  };
  if (!a.all_m) {
    emit(out, verdict_json(check(a.m)));
    return kExitOk;
  }
  json all = json::array();
  for (int m = 0; m <= choose2(a.n); ++m) all.push_back(verdict_json(check(m)));
  emit(out, all);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proportional component-order connectivity toolkit", "copc"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Exact CO value of a graph file");
  c->add_option("--graph", compute.graph, "Edge-list or graph6 file")->required();
  c->add_option("--r", compute.r, "Proportion A/B")->required();
  c->add_option("--mode", compute.mode, "vertex|edge")->required();
  c->add_flag("--witness", compute.witness, "Include the minimum disconnecting set");

  FormulaArgs formula;
  auto* f = app.add_subcommand("formula", "Closed-form value for a graph class");
  f->add_option("--class", formula.cls, "path|cycle|complete|complete-bipartite")->required();
  f->add_option("--n", formula.n, "Order");
  f->add_option("--a", formula.a, "Smaller part (complete-bipartite)");
  f->add_option("--b", formula.b, "Larger part (complete-bipartite)");
  f->add_option("--r", formula.r, "Proportion A/B")->required();
  f->add_option("--mode", formula.mode, "vertex|edge")->required();

  ExtremalArgs extremal;
  auto* e = app.add_subcommand("extremal", "Family statistic over G(n,m)");
  e->add_option("--n", extremal.n)->required();
  e->add_option("--m", extremal.m)->required();
  e->add_option("--r", extremal.r)->required();
  e->add_option("--stat", extremal.stat, "covmin|coemin|covmax|coemax")->required();
  e->add_flag("--enumerate", extremal.enumerate, "Also compute the enumeration ground truth");

  ScanArgs scan;
  auto* s = app.add_subcommand("scan", "Sweep a family statistic over all m");
  s->add_option("--n", scan.n)->required();
  s->add_option("--r", scan.r)->required();
  s->add_option("--stat", scan.stat)->required();
  s->add_flag("--all-m", scan.all_m);
  s->add_flag("--enumerate", scan.enumerate);
  s->add_flag("--witness", scan.witness);
  s->add_option("--out", scan.out_path, "CSV destination (stdout if omitted)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Formula-versus-oracle discrepancy suite");
  v->add_option("--n-max", verify.n_max);
  v->add_option("--r-grid", verify.grid, "Comma-separated list of A/B");

  ConjectureArgs conjecture;
  auto* k = app.add_subcommand("conjecture", "Conjecture verdicts");
  k->add_option("--name", conjecture.name, "equal-partition|coemax-bound")->required();
  k->add_option("--n", conjecture.n)->required();
  k->add_option("--m", conjecture.m);
  k->add_option("--k", conjecture.k, "Number of equal parts (equal-partition)");
  k->add_flag("--all-m", conjecture.all_m);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out);
    if (f->parsed()) return cmd_formula(formula, out);
    if (e->parsed()) return cmd_extremal(extremal, out);
    if (s->parsed()) return cmd_scan(scan, out);
    if (v->parsed()) return cmd_verify(verify, out);
    if (k->parsed()) return cmd_conjecture(conjecture, out);
  } catch (const Infeasible& ex) {
    err << "infeasible: " << ex.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace copc
