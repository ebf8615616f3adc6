#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "cic/error.hpp"

namespace cic {

using vertex_id = int;
using edge_id = int;

struct Edge {
  vertex_id u;
  vertex_id v;

  vertex_id other(vertex_id x) const noexcept { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  vertex_id neighbor;
  edge_id edge;
  friend bool operator==(const Incidence&, const Incidence&) = default;
};

using LabelPair = std::pair<std::string, std::string>;

/// Undirected simple graph with stable string labels. Edge ids follow the
/// order in which edges were supplied. Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(vertex_id v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(edge_id e) const { return edges_.at(static_cast<std::size_t>(e)); }

  std::span<const Incidence> incident(vertex_id v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  int degree(vertex_id v) const { return static_cast<int>(incident(v).size()); }

  std::optional<vertex_id> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  vertex_id index_of(const std::string& label) const {
    auto v = find(label);
    if (!v) throw error(errc::unknown_label, "vertex '" + label + "'");
    return *v;
  }

  std::vector<LabelPair> labeled_edges() const {
    std::vector<LabelPair> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(labels_[e.u], labels_[e.v]);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

  friend Graph build_graph(const std::vector<std::string>& vertices,
                           const std::vector<LabelPair>& edges);

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::string, vertex_id> index_;
};

inline Graph build_graph(const std::vector<std::string>& vertices,
                         const std::vector<LabelPair>& edges) {
  Graph g;
  g.labels_ = vertices;
  g.adjacency_.resize(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!g.index_.emplace(vertices[i], static_cast<vertex_id>(i)).second)
      throw error(errc::duplicate_vertex, "vertex '" + vertices[i] + "'");
  }

  struct pair_hash {
    std::size_t operator()(const std::pair<int, int>& p) const noexcept {
      return std::hash<long long>{}((static_cast<long long>(p.first) << 32) ^ p.second);
    }
  };
  std::unordered_set<std::pair<int, int>, pair_hash> seen;

  g.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = g.index_.find(a);
    if (ia == g.index_.end()) throw error(errc::unknown_label, "edge endpoint '" + a + "'");
    auto ib = g.index_.find(b);
    if (ib == g.index_.end()) throw error(errc::unknown_label, "edge endpoint '" + b + "'");
    const vertex_id u = ia->second, v = ib->second;
    if (u == v) throw error(errc::self_loop, "edge (" + a + ", " + b + ")");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw error(errc::duplicate_edge, "edge (" + a + ", " + b + ")");
    const auto id = static_cast<edge_id>(g.edges_.size());
    g.edges_.push_back({u, v});
    g.adjacency_[u].push_back({v, id});
    g.adjacency_[v].push_back({u, id});
  }
  return g;
}

inline int max_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw error(errc::invalid_argument, "max_degree of an empty graph");
  int best = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    best = std::max(best, g.degree(static_cast<vertex_id>(v)));
  return best;
}

inline bool is_connected(const Graph& g) {
  const auto n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<vertex_id> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incident(v)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == n;
}

inline void require_connected(const Graph& g) {
  if (!is_connected(g))
    throw error(errc::disconnected, "graph with " + std::to_string(g.vertex_count()) +
                                        " vertices is not connected");
}

struct Bipartition {
  std::vector<vertex_id> left;
  std::vector<vertex_id> right;
};

/// Odd cycle as a closed vertex walk v0 v1 ... v(k-1); the edge (v(k-1), v0)
/// closes it.
struct NotBipartite {
  std::vector<vertex_id> odd_cycle;
};

/// 2-colors by BFS from vertex 0, which lands in `left`. Parts are listed in
/// vertex-id order.
inline std::variant<Bipartition, NotBipartite> bipartition(const Graph& g) {
  require_connected(g);
  const auto n = g.vertex_count();
  std::vector<int> side(n, -1), parent(n, -1), depth(n, 0);
  std::queue<vertex_id> queue;
  side[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop();
    for (const auto& inc : g.incident(v)) {
      const auto w = inc.neighbor;
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        parent[w] = v;
        depth[w] = depth[v] + 1;
        queue.push(w);
      } else if (side[w] == side[v]) {
        // Walk both ends up to their common ancestor.
        std::vector<vertex_id> up_v, up_w;
        vertex_id a = v, b = w;
        while (depth[a] > depth[b]) { up_v.push_back(a); a = parent[a]; }
        while (depth[b] > depth[a]) { up_w.push_back(b); b = parent[b]; }
        while (a != b) {
          up_v.push_back(a); a = parent[a];
          up_w.push_back(b); b = parent[b];
        }
        NotBipartite nb;
        nb.odd_cycle = up_v;
        nb.odd_cycle.push_back(a);
        nb.odd_cycle.insert(nb.odd_cycle.end(), up_w.rbegin(), up_w.rend());
        return nb;
      }
    }
  }
  Bipartition parts;
  for (std::size_t v = 0; v < n; ++v)
    (side[v] == 0 ? parts.left : parts.right).push_back(static_cast<vertex_id>(v));
  return parts;
}

}  // namespace cic
