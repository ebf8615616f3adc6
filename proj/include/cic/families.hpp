#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "cic/error.hpp"
#include "cic/graph.hpp"

namespace cic {

// Labels of the G(m) family.
inline std::string gm_hub_label() { return "x0"; }
inline std::string gm_pair_label(int i, int j) {
  return "x_" + std::to_string(i) + "_" + std::to_string(j);
}
inline std::string gm_grid_label(int p, int q) {
  return "y_" + std::to_string(p) + "_" + std::to_string(q);
}

// Closed-form sizes and degrees of G(m).
constexpr std::int64_t gm_vertex_count(std::int64_t m) { return (3 * m * m - m) / 2 + 1; }
constexpr std::int64_t gm_edge_count(std::int64_t m) { return m * m * m; }
constexpr std::int64_t gm_hub_degree(std::int64_t m) { return m * m; }
constexpr std::int64_t gm_pair_degree(std::int64_t m) { return 2 * m; }
constexpr std::int64_t gm_grid_degree(std::int64_t m) { return m; }

/// G(100) already has 10^6 edges.
inline constexpr int kMaxGeneratedM = 100;

/// G(m): hub x0 joined to every y_p_q, and each x_i_j (i < j) joined to the
/// rows y_i_* and y_j_*. Vertices: x0, then x_i_j in (i,j) order, then y_p_q
/// in (p,q) order. Edges: hub edges in (p,q) order, then for each (i,j) the
/// m edges to row i followed by the m edges to row j.
inline Graph gen_gm(int m) {
  if (m < 2) throw error(errc::m_out_of_range, "m=" + std::to_string(m) + " (need m >= 2)");
  if (m > kMaxGeneratedM)
    throw error(errc::m_out_of_range,
                "m=" + std::to_string(m) + " (limit " + std::to_string(kMaxGeneratedM) + ")");
  std::vector<std::string> vertices{gm_hub_label()};
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) vertices.push_back(gm_pair_label(i, j));
  for (int p = 1; p <= m; ++p)
    for (int q = 1; q <= m; ++q) vertices.push_back(gm_grid_label(p, q));

  std::vector<LabelPair> edges;
  edges.reserve(static_cast<std::size_t>(gm_edge_count(m)));
  for (int p = 1; p <= m; ++p)
    for (int q = 1; q <= m; ++q) edges.emplace_back(gm_hub_label(), gm_grid_label(p, q));
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      for (int q = 1; q <= m; ++q) edges.emplace_back(gm_pair_label(i, j), gm_grid_label(i, q));
      for (int q = 1; q <= m; ++q) edges.emplace_back(gm_pair_label(i, j), gm_grid_label(j, q));
    }
  }
  return build_graph(vertices, edges);
}

namespace detail {
inline std::vector<std::string> numbered(const std::string& prefix, int count) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}
}  // namespace detail

/// Path with n edges on vertices v1..v(n+1).
inline Graph gen_path(int n) {
  if (n < 1) throw error(errc::size_out_of_range, "path with " + std::to_string(n) + " edges");
  auto vs = detail::numbered("v", n + 1);
  std::vector<LabelPair> es;
  for (int k = 0; k < n; ++k) es.emplace_back(vs[k], vs[k + 1]);
  return build_graph(vs, es);
}

/// Cycle v1 v2 ... vn v1; edge k joins v(k+1) and v(k+2), the last closes at v1.
inline Graph gen_cycle(int n) {
  if (n < 3) throw error(errc::size_out_of_range, "cycle on " + std::to_string(n) + " vertices");
  auto vs = detail::numbered("v", n);
  std::vector<LabelPair> es;
  for (int k = 0; k < n; ++k) es.emplace_back(vs[k], vs[(k + 1) % n]);
  return build_graph(vs, es);
}

/// Star with center c and leaves l1..ln.
inline Graph gen_star(int n) {
  if (n < 1) throw error(errc::size_out_of_range, "star with " + std::to_string(n) + " leaves");
  std::vector<std::string> vs{"c"};
  for (auto& l : detail::numbered("l", n)) vs.push_back(l);
  std::vector<LabelPair> es;
  for (int k = 1; k <= n; ++k) es.emplace_back("c", vs[k]);
  return build_graph(vs, es);
}

/// K_{a,b} on a1..aa and b1..bb, edges in (i,j) order.
inline Graph gen_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw error(errc::size_out_of_range,
                "K_{" + std::to_string(a) + "," + std::to_string(b) + "}");
  auto as = detail::numbered("a", a);
  auto bs = detail::numbered("b", b);
  std::vector<std::string> vs = as;
  vs.insert(vs.end(), bs.begin(), bs.end());
  std::vector<LabelPair> es;
  for (const auto& x : as)
    for (const auto& y : bs) es.emplace_back(x, y);
  return build_graph(vs, es);
}

/// Uniform draw from [0, bound) by rejection on raw std::mt19937_64 output,
/// so the stream is identical on every standard library.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Uniform labelled tree on v1..vn from a random Prüfer sequence. The
/// sequence is drawn from std::mt19937_64 seeded with `seed`; edges are
/// emitted in decoding order.
inline Graph gen_random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw error(errc::size_out_of_range, "tree on " + std::to_string(n) + " vertices");
  auto vs = detail::numbered("v", n);
  std::vector<LabelPair> es;
  if (n == 2) {
    es.emplace_back(vs[0], vs[1]);
    return build_graph(vs, es);
  }
  std::mt19937_64 rng(seed);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));

  std::vector<int> remaining(static_cast<std::size_t>(n), 1);
  for (int c : code) ++remaining[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (remaining[v] == 1) leaves.push(v);
  for (int c : code) {
    const int leaf = leaves.top();
    leaves.pop();
    es.emplace_back(vs[leaf], vs[c]);
    if (--remaining[c] == 1) leaves.push(c);
  }
  const int a = leaves.top();
  leaves.pop();
  const int b = leaves.top();
  es.emplace_back(vs[a], vs[b]);
  return build_graph(vs, es);
}

}  // namespace cic
