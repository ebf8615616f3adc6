#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cic/audit.hpp"
#include "cic/coloring.hpp"
#include "cic/error.hpp"
#include "cic/graph.hpp"
#include "cic/solver.hpp"

// JSON and DOT serialization. Key order is fixed (ordered_json), so equal
// values always serialize to identical bytes.

namespace cic {

using json = nlohmann::ordered_json;

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.labeled_edges()) edges.push_back({a, b});
  return {{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
      throw error(errc::format_error, "graph JSON needs \"vertices\" and \"edges\"");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    std::vector<LabelPair> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw error(errc::format_error, "edge entry " + e.dump() + " is not a label pair");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return build_graph(vertices, edges);
  } catch (const nlohmann::json::exception& ex) {
    throw error(errc::format_error, ex.what());
  }
}

inline json to_json(const Coloring& c) { return {{"t", c.t}, {"colors", c.colors}}; }

inline Coloring coloring_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("t") || !j.contains("colors"))
      throw error(errc::format_error, "coloring JSON needs \"t\" and \"colors\"");
    return Coloring{j.at("t").get<int>(), j.at("colors").get<std::vector<int>>()};
  } catch (const nlohmann::json::exception& ex) {
    throw error(errc::format_error, ex.what());
  }
}

inline json to_json(const Verdict& v, const Graph& g) {
  json failures = json::array();
  for (const auto& f : v.failures) {
    json item{{"kind", std::string(to_string(f.kind))}};
    if (f.vertex) item["vertex"] = g.label(*f.vertex);
    if (!f.edges.empty()) item["edges"] = f.edges;
    if (f.color) item["color"] = *f.color;
    item["detail"] = f.detail;
    failures.push_back(std::move(item));
  }
  return {{"ok", v.ok}, {"failures", std::move(failures)}};
}

inline json to_json(const Decision& d) {
  json j{{"status", std::string(to_string(d.status))}};
  if (d.certificate) j["coloring"] = to_json(*d.certificate);
  if (!d.reason.empty()) j["reason"] = d.reason;
  j["nodes"] = d.nodes;
  return j;
}

inline json to_json(const SpectrumResult& s) {
  json outcomes = json::array();
  for (const auto& o : s.outcomes) {
    json item{{"t", o.t}};
    const json decision = to_json(o.decision);
    for (const auto& [k, v] : decision.items()) item[k] = v;
    outcomes.push_back(std::move(item));
  }
  return {{"graph", s.graph_id},
          {"chromatic_index", s.chromatic_index},
          {"t_min", s.t_min},
          {"t_max", s.t_max},
          {"spectrum", s.members()},
          {"outcomes", std::move(outcomes)},
          {"warnings", s.warnings}};
}

inline json to_json(const AuditReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    json w = json::object();
    for (const auto& x : s.witnesses) w[x.name] = x.value;
    json item{{"id", s.id}, {"statement", s.statement}, {"holds", s.holds}, {"witnesses", w}};
    if (!s.note.empty()) item["note"] = s.note;
    steps.push_back(std::move(item));
  }
  json j{{"m", r.params.m}, {"k0", r.params.k0}, {"t0", r.t0}, {"pass", r.pass}};
  j["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
  j["limiting_step"] = r.limiting_step ? json(*r.limiting_step) : json(nullptr);
  j["steps"] = std::move(steps);
  j["assumptions"] = r.assumptions;
  j["interpretations"] = r.interpretations;
  return j;
}

inline json to_json(const AuditRangeSummary& s) {
  json entries = json::array();
  for (const auto& e : s.entries) {
    entries.push_back({{"m", e.m},
                       {"all_pass", e.all_pass},
                       {"exhaustive", e.exhaustive},
                       {"cases", e.cases},
                       {"failing_cases", e.failing_cases},
                       {"monotone", e.monotone},
                       {"k0_min", to_json(e.at_min)},
                       {"k0_max", to_json(e.at_max)}});
  }
  return {{"all_pass", s.all_pass()}, {"entries", std::move(entries)}};
}

/// DOT with each edge labelled by its index and, when given, its color.
inline std::string to_dot(const Graph& g, const Coloring* c = nullptr) {
  if (c) validate_shape(g, *c);
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& v : g.labels()) out << "  " << quote(v) << ";\n";
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(static_cast<edge_id>(e));
    std::string label = "e" + std::to_string(e);
    if (c) label += ":" + std::to_string(c->colors[e]);
    out << "  " << quote(g.label(ed.u)) << " -- " << quote(g.label(ed.v))
        << " [label=" << quote(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::format_error, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw error(errc::format_error, path + ": " + ex.what());
  }
}

}  // namespace cic
