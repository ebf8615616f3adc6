#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "cic/coloring.hpp"
#include "cic/error.hpp"
#include "cic/graph.hpp"
#include "cic/solver.hpp"

namespace cic {

/// Variable layout of the CNF encoding.
///   edge variable x(e,c), 1 <= c <= t: index e*t + c
///   arc variable a(v,s): the palette of v is the cyclic arc of deg(v)
///   colors starting at s. A vertex with deg(v) == t has the single arc
///   s = 1; one with deg(v) > t has none (the at-most-one clauses are
///   already unsatisfiable there).
class CnfLayout {
 public:
  CnfLayout(const Graph& g, int t) : g_(&g), t_(t) {
    int next = static_cast<int>(g.edge_count()) * t + 1;
    arc_base_.resize(g.vertex_count());
    arc_count_.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const int d = g.degree(static_cast<vertex_id>(v));
      arc_count_[v] = d > t ? 0 : (d == t ? 1 : t);
      arc_base_[v] = next;
      next += arc_count_[v];
    }
    num_vars_ = next - 1;
  }

  int t() const noexcept { return t_; }
  int num_vars() const noexcept { return num_vars_; }
  int edge_var(edge_id e, int c) const { return e * t_ + c; }
  int arc_count(vertex_id v) const { return arc_count_[v]; }
  /// Arc starts are 1..arc_count(v).
  int arc_var(vertex_id v, int start) const { return arc_base_[v] + start - 1; }

 private:
  const Graph* g_;
  int t_;
  int num_vars_ = 0;
  std::vector<int> arc_base_;
  std::vector<int> arc_count_;
};

struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<std::string> comments;

  /// DIMACS text: comment block, "p cnf V C", one 0-terminated clause per line.
  std::string to_dimacs() const {
    std::ostringstream out;
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
    for (const auto& clause : clauses) {
      for (int lit : clause) out << lit << ' ';
      out << "0\n";
    }
    return out.str();
  }
};

/// CNF whose models correspond one-to-one with the cyclically-interval
/// t-colorings of g (arc variables are determined by the coloring).
inline Cnf export_cnf(const Graph& g, int t) {
  if (t < 1 || static_cast<std::size_t>(t) > g.edge_count())
    throw error(errc::range_error, "t=" + std::to_string(t) + " outside [1, |E|=" +
                                       std::to_string(g.edge_count()) + "]");
  require_connected(g);
  const CnfLayout layout(g, t);
  Cnf cnf;
  cnf.num_vars = layout.num_vars();
  auto& cl = cnf.clauses;

  cnf.comments.push_back("cyclically-interval " + std::to_string(t) + "-coloring, " +
                         std::to_string(g.vertex_count()) + " vertices, " +
                         std::to_string(g.edge_count()) + " edges");
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(static_cast<edge_id>(e));
    for (int c = 1; c <= t; ++c)
      cnf.comments.push_back("var " + std::to_string(layout.edge_var(static_cast<edge_id>(e), c)) +
                             " edge " + std::to_string(e) + " (" + g.label(ed.u) + "," +
                             g.label(ed.v) + ") color " + std::to_string(c));
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto vid = static_cast<vertex_id>(v);
    for (int s = 1; s <= layout.arc_count(vid); ++s)
      cnf.comments.push_back("var " + std::to_string(layout.arc_var(vid, s)) + " vertex " +
                             g.label(vid) + " arc-start " + std::to_string(s) + " length " +
                             std::to_string(g.degree(vid)));
  }

  // Exactly one color per edge.
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto id = static_cast<edge_id>(e);
    std::vector<int> some;
    for (int c = 1; c <= t; ++c) some.push_back(layout.edge_var(id, c));
    cl.push_back(some);
    for (int a = 1; a <= t; ++a)
      for (int b = a + 1; b <= t; ++b) cl.push_back({-layout.edge_var(id, a), -layout.edge_var(id, b)});
  }

  // At most one edge of each color at each vertex.
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto inc = g.incident(static_cast<vertex_id>(v));
    for (int c = 1; c <= t; ++c)
      for (std::size_t i = 0; i < inc.size(); ++i)
        for (std::size_t j = i + 1; j < inc.size(); ++j)
          cl.push_back({-layout.edge_var(inc[i].edge, c), -layout.edge_var(inc[j].edge, c)});
  }

  // Palette of v is exactly one arc of length deg(v) and holds every color
  // used at v.
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto vid = static_cast<vertex_id>(v);
    const int arcs = layout.arc_count(vid);
    if (arcs == 0) continue;
    const int d = g.degree(vid);
    std::vector<int> some;
    for (int s = 1; s <= arcs; ++s) some.push_back(layout.arc_var(vid, s));
    cl.push_back(some);
    for (int a = 1; a <= arcs; ++a)
      for (int b = a + 1; b <= arcs; ++b)
        cl.push_back({-layout.arc_var(vid, a), -layout.arc_var(vid, b)});
    for (const auto& inc : g.incident(vid)) {
      for (int c = 1; c <= t; ++c) {
        std::vector<int> clause{-layout.edge_var(inc.edge, c)};
        for (int s = 1; s <= arcs; ++s) {
          // c lies on the arc starting at s iff (c - s) mod t < d.
          if (((c - s) % t + t) % t < d) clause.push_back(layout.arc_var(vid, s));
        }
        cl.push_back(clause);
      }
    }
  }

  // Every color is used.
  for (int c = 1; c <= t; ++c) {
    std::vector<int> some;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      some.push_back(layout.edge_var(static_cast<edge_id>(e), c));
    cl.push_back(some);
  }
  return cnf;
}

/// Maps a model (model[var] for var in 1..num_vars; index 0 unused) back
/// to a coloring. Throws FormatError unless each edge has exactly one color.
inline Coloring decode_model(const Graph& g, int t, const std::vector<bool>& model) {
  const CnfLayout layout(g, t);
  if (model.size() < static_cast<std::size_t>(layout.num_vars()) + 1)
    throw error(errc::format_error, "model has " + std::to_string(model.size()) +
                                        " slots, need " + std::to_string(layout.num_vars() + 1));
  Coloring out{t, std::vector<int>(g.edge_count(), 0)};
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    for (int c = 1; c <= t; ++c) {
      if (!model[layout.edge_var(static_cast<edge_id>(e), c)]) continue;
      if (out.colors[e] != 0)
        throw error(errc::format_error, "edge " + std::to_string(e) + " has two colors");
      out.colors[e] = c;
    }
    if (out.colors[e] == 0)
      throw error(errc::format_error, "edge " + std::to_string(e) + " has no color");
  }
  return out;
}

}  // namespace cic
