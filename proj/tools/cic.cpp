// cic: generate graphs, check and search cyclically-interval edge colorings,
// and audit the G(m) counting argument.
//
// Exit codes: 0 success / verified, 1 checked and false, 2 usage error,
// 3 I/O or format error, 4 search budget exhausted.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cic/cic.hpp"

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;
constexpr int kExitBudget = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw cic::error(cic::errc::format_error, "cannot write " + path);
  out << text;
}

std::string dump(const cic::json& j) { return j.dump(2) + "\n"; }

cic::Graph load_graph(const std::string& path) {
  return cic::graph_from_json(cic::read_json_file(path));
}

cic::Coloring load_coloring(const std::string& path) {
  return cic::coloring_from_json(cic::read_json_file(path));
}

struct BudgetFlags {
  std::optional<std::uint64_t> nodes;
  std::optional<std::int64_t> ms;
  bool no_symmetry = false;
  std::string order = "degree";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--budget-nodes", nodes, "Search node budget")->check(CLI::PositiveNumber);
    cmd->add_option("--budget-ms", ms, "Search time budget in milliseconds")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--no-symmetry-breaking", no_symmetry, "Do not fix the first edge to color 1");
    cmd->add_option("--edge-order", order, "Edge order: degree or input")
        ->check(CLI::IsMember({"degree", "input"}));
  }

  cic::SolverConfig config() const {
    cic::SolverConfig cfg;
    cfg.node_budget = nodes;
    if (ms) cfg.time_budget = std::chrono::milliseconds(*ms);
    cfg.symmetry_breaking = !no_symmetry;
    cfg.edge_order = order == "input" ? cic::EdgeOrder::input_order
                                      : cic::EdgeOrder::degree_sum_descending;
    return cfg;
  }
};

std::string audit_table(const cic::AuditRangeSummary& s) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "m" << std::setw(12) << "k0" << std::setw(12) << "t0";
  for (const char* id : {"S1", "S2", "S3", "S4", "S5", "S6"}) out << std::setw(4) << id;
  out << std::setw(7) << "result" << "limiting step\n";
  auto row = [&](const cic::AuditReport& r) {
    out << std::setw(6) << r.params.m << std::setw(12) << r.params.k0 << std::setw(12) << r.t0;
    for (const auto& st : r.steps) out << std::setw(4) << (st.holds ? "ok" : "x");
    out << std::setw(7) << (r.pass ? "pass" : "FAIL") << r.limiting_step.value_or("-") << "\n";
  };
  for (const auto& e : s.entries) {
    row(e.at_min);
    row(e.at_max);
    if (e.exhaustive)
      out << "      all " << e.cases << " k0 values audited, " << e.failing_cases << " failing\n";
  }
  out << (s.all_pass() ? "all audited m pass\n" : "some audited m fail\n");
  return out.str();
}

std::string spectrum_table(const cic::SpectrumResult& s) {
  std::ostringstream out;
  out << "graph " << (s.graph_id.empty() ? "-" : s.graph_id) << ", chromatic index "
      << s.chromatic_index << ", t in [" << s.t_min << "," << s.t_max << "]\n";
  for (const auto& o : s.outcomes)
    out << "  t=" << std::setw(5) << std::left << o.t << cic::to_string(o.decision.status)
        << "\n";
  out << "spectrum: {";
  bool first = true;
  for (int t : s.members()) {
    out << (first ? "" : ",") << t;
    first = false;
  }
  out << "}\n";
  for (const auto& w : s.warnings) out << "warning: " << w << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclically-interval edge coloring toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph family as Graph JSON");
  std::string family;
  int m = 2, n = 0, a = 0, b = 0;
  std::uint64_t seed = 0;
  std::string gen_out;
  gen->add_option("--family", family, "gm, path, cycle, star, kab or tree")
      ->required()
      ->check(CLI::IsMember({"gm", "path", "cycle", "star", "kab", "tree"}));
  gen->add_option("--m", m, "Parameter m of G(m)");
  gen->add_option("--n", n, "Edges (path), vertices (cycle, tree) or leaves (star)");
  gen->add_option("--a", a, "Left part size (kab)");
  gen->add_option("--b", b, "Right part size (kab)");
  gen->add_option("--seed", seed, "Random tree seed");
  gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

  // check
  auto* check = app.add_subcommand("check", "Verify a coloring certificate");
  std::string graph_path, coloring_path;
  check->add_option("--graph", graph_path, "Graph JSON")->required();
  check->add_option("--coloring", coloring_path, "Coloring JSON")->required();
  bool proper_only = false;
  check->add_flag("--proper-only", proper_only, "Check properness and surjectivity only");

  // solve
  auto* solve = app.add_subcommand("solve", "Decide whether a cyclically-interval t-coloring exists");
  int solve_t = 0;
  std::string solve_out;
  BudgetFlags solve_budget;
  solve->add_option("--graph", graph_path, "Graph JSON")->required();
  solve->add_option("--t", solve_t, "Number of colors")->required();
  solve->add_option("-o,--out", solve_out, "Output file (default stdout)");
  solve_budget.add_to(solve);

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "Decide every t in a range");
  std::optional<int> t_min, t_max;
  unsigned jobs = 1;
  std::string spec_out;
  BudgetFlags spec_budget;
  spec->add_option("--graph", graph_path, "Graph JSON")->required();
  spec->add_option("--t-min", t_min, "Smallest t (default chromatic index)");
  spec->add_option("--t-max", t_max, "Largest t (default |E|)");
  spec->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  spec->add_option("-o,--out", spec_out,
                   "Write JSON here and the table to stdout (default: JSON to stdout, "
                   "table to stderr)");
  spec_budget.add_to(spec);

  // audit
  auto* aud = app.add_subcommand("audit", "Audit each step of the G(m) argument");
  std::int64_t m_min = 8, m_max = 8;
  std::optional<std::int64_t> k0;
  bool audit_json = false;
  aud->add_option("--m-min", m_min, "Smallest m");
  aud->add_option("--m-max", m_max, "Largest m");
  aud->add_option("--k0", k0, "Audit a single k0 (requires m-min = m-max)");
  aud->add_flag("--json", audit_json, "Emit JSON instead of a table");

  // export-cnf
  auto* cnf = app.add_subcommand("export-cnf", "Write the DIMACS CNF encoding");
  int cnf_t = 0;
  std::string cnf_out;
  cnf->add_option("--graph", graph_path, "Graph JSON")->required();
  cnf->add_option("--t", cnf_t, "Number of colors")->required();
  cnf->add_option("-o,--out", cnf_out, "Output file (default stdout)");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "Write Graphviz DOT");
  std::string dot_out;
  dot->add_option("--graph", graph_path, "Graph JSON")->required();
  dot->add_option("--coloring", coloring_path, "Coloring JSON for edge labels");
  dot->add_option("-o,--out", dot_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      cic::Graph g;
      if (family == "gm") {
        g = cic::gen_gm(m);
      } else if (family == "path") {
        g = cic::gen_path(n);
      } else if (family == "cycle") {
        g = cic::gen_cycle(n);
      } else if (family == "star") {
        g = cic::gen_star(n);
      } else if (family == "kab") {
        g = cic::gen_complete_bipartite(a, b);
      } else {
        g = cic::gen_random_tree(n, seed);
      }
      write_output(gen_out, dump(cic::to_json(g)));
      return 0;
    }

    if (*check) {
      const auto g = load_graph(graph_path);
      const auto c = load_coloring(coloring_path);
      const auto v = proper_only ? cic::check_proper(g, c) : cic::check_cyclically_interval(g, c);
      std::cout << dump(cic::to_json(v, g));
      return v.ok ? 0 : kExitFalse;
    }

    if (*solve) {
      const auto g = load_graph(graph_path);
      const auto d = cic::decide(g, solve_t, solve_budget.config());
      write_output(solve_out, dump(cic::to_json(d)));
      switch (d.status) {
        case cic::Status::colorable: return 0;
        case cic::Status::not_colorable: return kExitFalse;
        case cic::Status::budget_exceeded: return kExitBudget;
      }
    }

    if (*spec) {
      const auto g = load_graph(graph_path);
      const auto s = cic::spectrum(g, {t_min, t_max}, spec_budget.config(), jobs, graph_path);
      const auto text = dump(cic::to_json(s));
      if (spec_out.empty()) {
        std::cout << text;
        std::cerr << spectrum_table(s);
      } else {
        write_output(spec_out, text);
        std::cout << spectrum_table(s);
      }
      if (!s.members().empty()) return 0;
      return s.any_budget_exceeded() ? kExitBudget : kExitFalse;
    }

    if (*aud) {
      if (k0) {
        if (m_min != m_max) throw UsageError("--k0 needs --m-min equal to --m-max");
        const auto r = cic::audit({m_min, *k0});
        if (audit_json) {
          std::cout << dump(cic::to_json(r));
        } else {
          cic::AuditRangeSummary one;
          cic::AuditRangeEntry e;
          e.m = m_min;
          e.at_min = r;
          e.at_max = r;
          e.all_pass = r.pass;
          one.entries.push_back(e);
          std::cout << audit_table(one);
        }
        return r.pass ? 0 : kExitFalse;
      }
      if (m_min < 2 || m_min > m_max) throw UsageError("need 2 <= m-min <= m-max");
      const auto s = cic::audit_range(m_min, m_max);
      std::cout << (audit_json ? dump(cic::to_json(s)) : audit_table(s));
      return s.all_pass() ? 0 : kExitFalse;
    }

    if (*cnf) {
      const auto g = load_graph(graph_path);
      write_output(cnf_out, cic::export_cnf(g, cnf_t).to_dimacs());
      return 0;
    }

    if (*dot) {
      const auto g = load_graph(graph_path);
      std::optional<cic::Coloring> c;
      if (!coloring_path.empty()) c = load_coloring(coloring_path);
      write_output(dot_out, cic::to_dot(g, c ? &*c : nullptr));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cic::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case cic::errc::m_out_of_range:
      case cic::errc::size_out_of_range:
      case cic::errc::range_error:
      case cic::errc::params_out_of_range:
      case cic::errc::invalid_argument:
        return kExitUsage;
      case cic::errc::search_budget_exceeded:
        return kExitBudget;
      default:
        return kExitFormat;
    }
  }
  return kExitUsage;
}
