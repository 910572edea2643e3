#include "cli.hpp"

#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "wreath/actions.hpp"
#include "wreath/bounds.hpp"
#include "wreath/classcount.hpp"
#include "wreath/kernels.hpp"
#include "wreath/report_json.hpp"
#include "wreath/structure.hpp"
#include "wreath/verify.hpp"

namespace wreath::cli {

namespace {

struct Options {
  std::string group;
  std::uint32_t k = 2;
  std::string method = "auto";
  std::string output = "table";
  int jobs = 0;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget_order, budget_colorings, budget_lift, budget_brute;
  bool all_blocks = false;
  std::string e_source = "auto";
  std::size_t probe_fixed = 0;
  std::string suite = "all";
  std::size_t m_from = 2, m_to = 5;
};

Budget budget_of(const Options& o) {
  Budget b = Budget::from_env();
  if (o.budget_order) b.max_group_order = *o.budget_order;
  if (o.budget_colorings) b.max_coloring_space = *o.budget_colorings;
  if (o.budget_lift) b.max_lift_degree = *o.budget_lift;
  if (o.budget_brute) b.max_brute_order = *o.budget_brute;
  return b;
}

void add_common(CLI::App* cmd, Options& o, bool needs_group, bool needs_k) {
  if (needs_group) cmd->add_option("--group", o.group, "group spec, e.g. cyclic:3 or gens:(1 2 3),(1 2)")->required();
  if (needs_k) cmd->add_option("--k", o.k, "number of conjugacy classes of X")->check(CLI::Range(1u, 1u << 20));
  cmd->add_option("--output", o.output, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--jobs", o.jobs, "worker threads (0 = all)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", o.seed, "seed for sampled checks");
  cmd->add_option("--budget-order", o.budget_order, "max materialized group order");
  cmd->add_option("--budget-colorings", o.budget_colorings, "max coloring space for the visited table");
  cmd->add_option("--budget-lift", o.budget_lift, "max degree of a lifted action");
  cmd->add_option("--budget-brute", o.budget_brute, "max order of the explicit wreath product");
}

void print_table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  for (const auto& [key, value] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << key << value << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string elapsed(const CountResult& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << r.elapsed.count() << "s";
  return os.str();
}

std::string format_bound(const BoundReport& r) {
  std::ostringstream os;
  os << (r.lhs ? r.lhs->to_string() : "-") << ' ' << r.relation << ' ' << (r.rhs ? r.rhs->to_string() : "-")
     << "  " << to_string(r.holds) << "  " << r.mode;
  if (r.asymptotic) os << "  asymptotic";
  if (!r.e_source.empty()) os << "  e=" << r.e_source;
  if (!r.note.empty()) os << "  (" << r.note << ")";
  return os.str();
}

void print_bounds(std::ostream& out, const std::vector<BoundReport>& reports) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& r : reports) rows.emplace_back(r.name, format_bound(r));
  print_table(out, rows);
}

void csv_bounds(std::ostream& out, const std::vector<BoundReport>& reports) {
  out << "name,lhs,relation,rhs,holds,mode,asymptotic\n";
  for (const auto& r : reports)
    out << r.name << ',' << (r.lhs ? r.lhs->to_string() : "") << ',' << r.relation << ','
        << (r.rhs ? r.rhs->to_string() : "") << ',' << to_string(r.holds) << ',' << r.mode << ','
        << (r.asymptotic ? "true" : "false") << '\n';
}

// ------------------------------------------------------------------ count

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  const auto h = family(o.group, budget_of(o));
  std::vector<CountResult> results;
  if (o.method == "auto") {
    results.push_back(auto_count(h, o.k));
  } else if (o.method == "clifford") {
    results.push_back(clifford_count(h, o.k));
  } else if (o.method == "brute") {
    results.push_back(brute_force_count(o.k, h));
  } else if (o.method == "closed-form") {
    auto cf = closed_form_count(h, o.k);
    if (!cf) throw InvalidArgument("no closed form for '" + o.group + "' (symmetric, cyclic of prime degree, trivial)");
    results.push_back(*cf);
  } else {
    // every feasible method; they must agree
    if (auto cf = closed_form_count(h, o.k)) results.push_back(*cf);
    for (int which = 0; which < 2; ++which) {
      try {
        results.push_back(which == 0 ? clifford_count(h, o.k) : brute_force_count(o.k, h));
      } catch (const BudgetExceeded& e) {
        err << "note: " << (which == 0 ? "clifford" : "brute") << " skipped: " << e.what() << '\n';
      }
    }
    if (results.empty()) throw BudgetExceeded("all", "no method fits the budgets");
  }
  bool agree = true;
  for (const auto& r : results) agree = agree && r.value == results.front().value;

  if (o.output == "json") {
    Json j;
    j["command"] = "count";
    j["group"] = o.group;
    if (o.method == "all") {
      Json arr = Json::array();
      for (const auto& r : results) arr.push_back(to_json(r));
      j["results"] = arr;
      j["agree"] = agree;
    } else {
      const Json body = to_json(results.front());
      for (const auto& [key, value] : body.items()) j[key] = value;
    }
    out << j.dump(2) << '\n';
  } else if (o.output == "csv") {
    out << "group,k,degree,order,method,value,orbit_count\n";
    for (const auto& r : results)
      out << '"' << o.group << "\"," << r.k << ',' << r.degree << ',' << r.order.get_str() << ','
          << to_string(r.method) << ',' << r.value.get_str() << ','
          << (r.orbit_count ? r.orbit_count->get_str() : "") << '\n';
  } else {
    for (const auto& r : results) {
      print_table(out, {{"group", o.group},
                        {"degree", std::to_string(r.degree)},
                        {"order", r.order.get_str()},
                        {"k", std::to_string(r.k)},
                        {"method", std::string(to_string(r.method)) + (r.detail.empty() ? "" : " (" + r.detail + ")")},
                        {"value", r.value.get_str()},
                        {"orbits", r.orbit_count ? r.orbit_count->get_str() : "-"},
                        {"elapsed", elapsed(r)}});
      if (results.size() > 1) out << '\n';
    }
    if (o.method == "all") out << "agree     " << yes_no(agree) << '\n';
  }
  if (!agree) {
    err << "error: methods disagree\n";
    return kVerifyFailed;
  }
  return kOk;
}

// --------------------------------------------------------------- classify

int cmd_classify(const Options& o, std::ostream& out) {
  const auto h = family(o.group, budget_of(o));
  const auto report = structure_classify(h);
  std::optional<NumericInvariants> inv;
  if (!h.is_trivial())
    inv = numeric_invariants(h, h.size() <= h.budget().max_lattice_order);
  std::optional<BlockDecomposition> bd;
  if (report.transitive) bd = block_decomposition(h);
  const auto large = large_base_match(h);
  std::vector<std::vector<std::vector<Point>>> systems;
  if (o.all_blocks && report.transitive) systems = all_block_systems(h);

  if (o.output == "json") {
    Json j;
    j["command"] = "classify";
    j["group"] = o.group;
    j["degree"] = h.degree();
    j["order"] = h.order().get_str();
    j["structure"] = to_json(report);
    j["invariants"] = inv ? to_json(*inv) : Json(nullptr);
    j["decomposition"] = bd ? to_json(*bd) : Json(nullptr);
    if (large)
      j["large_base"] = Json{{"m", large->m}, {"l", large->ell}, {"t", large->t}};
    else
      j["large_base"] = nullptr;
    if (o.all_blocks) {
      Json arr = Json::array();
      for (const auto& s : systems) arr.push_back(blocks_json(s));
      j["block_systems"] = arr;
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  auto blocks_str = [](const std::vector<std::vector<Point>>& blocks) {
    std::string s;
    for (const auto& b : blocks) {
      s += "{";
      for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i] + 1);
      s += "}";
    }
    return s;
  };
  std::vector<std::pair<std::string, std::string>> rows{
      {"group", o.group},
      {"degree", std::to_string(h.degree())},
      {"order", h.order().get_str()},
      {"transitive", yes_no(report.transitive)},
      {"semiregular", yes_no(report.semiregular)},
      {"primitive", yes_no(report.primitive)},
      {"semiprimitive", yes_no(report.semiprimitive)},
      {"normal subgroups", std::to_string(report.normal_subgroup_count)}};
  if (inv) {
    rows.emplace_back("minimal degree", std::to_string(inv->mu));
    rows.emplace_back("base size", std::to_string(inv->b));
    rows.emplace_back("max sigma", std::to_string(inv->max_sigma));
    rows.emplace_back("e", inv->e ? inv->e->get_str() : "over budget");
  }
  if (bd) {
    rows.emplace_back("blocks", std::to_string(bd->r) + " " + blocks_str(bd->blocks));
    rows.emplace_back("kernel order", std::to_string(bd->kernel_indices.size()));
    rows.emplace_back("quotient order", std::to_string(bd->quotient.size()));
  }
  rows.emplace_back("large base", large ? "m=" + std::to_string(large->m) + " l=" + std::to_string(large->ell) +
                                              " t=" + std::to_string(large->t)
                                        : "no");
  for (std::size_t i = 0; i < systems.size(); ++i)
    rows.emplace_back("system " + std::to_string(i + 1), blocks_str(systems[i]));
  print_table(out, rows);
  return kOk;
}

// ----------------------------------------------------------------- bounds

int cmd_bounds(const Options& o, std::ostream& out) {
  if (o.probe_fixed > 0) {
    const auto probe = fixed_subset_probe(o.probe_fixed);
    if (o.output == "json") {
      Json rows = Json::array();
      for (const auto& r : probe.rows)
        rows.push_back({{"m", r.m}, {"checked", r.checked}, {"counterexamples", r.counterexamples}});
      out << Json{{"command", "bounds"}, {"probe", "fixed-subsets"}, {"rows", rows}, {"clean_from", probe.clean_from}}.dump(2)
          << '\n';
    } else {
      out << "m,checked,counterexamples\n";
      for (const auto& r : probe.rows) out << r.m << ',' << r.checked << ',' << r.counterexamples << '\n';
      out << "clean_from," << probe.clean_from << '\n';
    }
    return kOk;
  }
  const auto h = family(o.group, budget_of(o));
  std::vector<BoundReport> reports;
  if (!h.is_trivial()) reports.push_back(class_count_upper_bound(h, o.k, parse_e_source(o.e_source)));
  for (auto& r : predicates(h, o.k)) reports.push_back(std::move(r));
  if (const auto large = large_base_match(h)) {
    if (large->t == 1) reports.push_back(subset_orbit_bound(large->m, large->ell, o.k));
    reports.push_back(product_class_bound(large->m, large->ell, large->t, o.k));
    reports.push_back(coordinatewise_orbit_check(large->m, large->ell, large->t, o.k));
  }
  std::optional<SemiprimitiveReport> semi;
  std::string semi_note;
  try {
    semi = semiprimitive_report(h, o.k);
  } catch (const InvalidArgument& e) {
    semi_note = e.what();
  }

  if (o.output == "json") {
    Json j;
    j["command"] = "bounds";
    j["group"] = o.group;
    j["k"] = o.k;
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    j["reports"] = arr;
    j["semiprimitive"] = semi ? to_json(*semi) : Json(semi_note);
    out << j.dump(2) << '\n';
  } else if (o.output == "csv") {
    if (semi) reports.insert(reports.end(), semi->reports.begin(), semi->reports.end());
    csv_bounds(out, reports);
  } else {
    print_bounds(out, reports);
    out << '\n';
    if (semi) {
      out << "semiprimitive decomposition: r=" << semi->r << " |K|=" << semi->kernel_order.get_str()
          << " |H/K|=" << semi->quotient_order.get_str() << " e_K="
          << (semi->e_kernel ? semi->e_kernel->get_str() : "-") << '\n';
      print_bounds(out, semi->reports);
    } else {
      out << "semiprimitive decomposition: " << semi_note << '\n';
    }
  }
  return kOk;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> suites;
  if (o.suite == "all")
    suites = suite_names();
  else
    suites.push_back(o.suite);
  bool ok = true;
  Json summary = Json::array();
  std::ostringstream log;
  for (const auto& s : suites) {
    const auto r = run_suite(s, o.output == "json" ? log : out, o.seed);
    ok = ok && r.passed();
    summary.push_back({{"suite", r.name}, {"cases", r.cases}, {"failures", r.failures}});
  }
  if (o.output == "json") out << Json{{"command", "verify"}, {"suites", summary}, {"passed", ok}}.dump(2) << '\n';
  return ok ? kOk : kVerifyFailed;
}

// ------------------------------------------------------------------- scan

int cmd_scan(const Options& o, std::ostream& out) {
  const auto rows = counterexample_scan(o.m_from, o.m_to, budget_of(o));
  if (o.output == "json") {
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back({{"param", r.param}, {"k", r.k}, {"n", r.n}, {"order", r.order.get_str()},
                     {"value", r.value ? Json(r.value->get_str()) : Json(nullptr)},
                     {"bound", r.bound.to_string()}, {"holds", to_string(r.holds)}, {"mode", r.mode}});
    out << Json{{"command", "scan"}, {"rows", arr}}.dump(2) << '\n';
  } else if (o.output == "table") {
    std::vector<std::pair<std::string, std::string>> table;
    for (const auto& r : rows)
      table.emplace_back(r.param, (r.value ? r.value->get_str() : "skipped") + " vs " + r.bound.to_string() +
                                      "  " + to_string(r.holds));
    print_table(out, table);
  } else {
    out << scan_csv(rows);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugacy class counts of wreath products X wr H"};
  app.name("wreathcount");
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "number of conjugacy classes of X wr H");
  add_common(count, o, true, true);
  count->add_option("--method", o.method, "counting method")
      ->check(CLI::IsMember({"auto", "clifford", "brute", "closed-form", "all"}));

  auto* classify = app.add_subcommand("classify", "structure of H");
  add_common(classify, o, true, false);
  classify->add_flag("--all-blocks", o.all_blocks, "list every nontrivial block system");

  auto* bounds = app.add_subcommand("bounds", "evaluate the class-count bounds for (H, k)");
  add_common(bounds, o, false, true);
  bounds->add_option("--group", o.group, "group spec");
  bounds->add_option("--e-source", o.e_source, "auto, exact, n-third (5^(n/3)) or n-minus-1 (5^(n-1))")
      ->check(CLI::IsMember({"auto", "exact", "n-third", "n-minus-1"}));
  bounds->add_option("--probe-fixed", o.probe_fixed, "fixed-subset probe up to this m instead");

  auto* verify = app.add_subcommand("verify", "run a cross-check suite");
  add_common(verify, o, false, false);
  verify->add_option("suite", o.suite, "oracles, burnside, formulas, bounds, semiprimitive or all")
      ->check(CLI::IsMember({"all", "oracles", "burnside", "formulas", "bounds", "semiprimitive"}));

  auto* scan = app.add_subcommand("scan", "C2 wr C_m family at k = 2 against its growth bounds");
  add_common(scan, o, false, false);
  scan->add_option("--from", o.m_from, "first m")->check(CLI::PositiveNumber);
  scan->add_option("--to", o.m_to, "last m")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"wreathcount"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  // scan defaults to CSV unless --output is given
  bool output_given = false;
  for (const auto& a : args) output_given = output_given || a == "--output" || a.rfind("--output=", 0) == 0;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }
  if (scan->parsed() && !output_given) o.output = "csv";
  if (o.jobs > 0) kernels::set_threads(o.jobs);

  try {
    if (count->parsed()) return cmd_count(o, out, err);
    if (classify->parsed()) return cmd_classify(o, out);
    if (bounds->parsed()) {
      if (o.group.empty() && o.probe_fixed == 0) throw InvalidArgument("bounds needs --group or --probe-fixed");
      return cmd_bounds(o, out);
    }
    if (verify->parsed()) return cmd_verify(o, out);
    if (scan->parsed()) return cmd_scan(o, out);
  } catch (const ParseError& e) {
    err << "error: line " << e.line() << ", " << e.what() << '\n';
    return kInvalid;
  } catch (const Infeasible& e) {
    err << "error: " << e.what() << '\n'
        << "bracket: " << e.lower().get_str() << " <= k(G) < " << e.upper().to_string() << " (e from "
        << e.upper_source() << ")\n";
    return kBudget;
  } catch (const BudgetExceeded& e) {
    err << "error: budget " << e.budget() << " exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace wreath::cli
