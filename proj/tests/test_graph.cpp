#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "cic/families.hpp"
#include "cic/graph.hpp"
#include "cic/solver.hpp"

using namespace cic;

namespace {
errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected cic::error");
  return errc::invalid_argument;
}
}  // namespace

TEST_CASE("build_graph on the smallest graph", "[graph]") {
  const auto g = build_graph({"a", "b"}, {{"a", "b"}});
  REQUIRE(g.edge_count() == 1);
  CHECK(g.degree(g.index_of("a")) == 1);
  CHECK(g.degree(g.index_of("b")) == 1);
  CHECK(g.incident(0)[0] == Incidence{1, 0});
  CHECK(g.incident(1)[0] == Incidence{0, 0});
}

TEST_CASE("build_graph rejects malformed input", "[graph]") {
  CHECK(code_of([] { build_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == errc::duplicate_edge);
  CHECK(code_of([] { build_graph({"a"}, {{"a", "a"}}); }) == errc::self_loop);
  CHECK(code_of([] { build_graph({"a"}, {{"a", "z"}}); }) == errc::unknown_label);
  CHECK(code_of([] { build_graph({"a", "a"}, {}); }) == errc::duplicate_vertex);

  try {
    build_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("(b, a)") != std::string::npos);
  }
}

TEST_CASE("edge ids follow input order and adjacency is symmetric", "[graph]") {
  const auto g = gen_random_tree(9, 42);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(static_cast<edge_id>(e));
    auto has = [&](vertex_id from, vertex_id to) {
      for (const auto& inc : g.incident(from))
        if (inc.neighbor == to && inc.edge == static_cast<edge_id>(e)) return true;
      return false;
    };
    CHECK(has(ed.u, ed.v));
    CHECK(has(ed.v, ed.u));
  }
}

TEST_CASE("max_degree", "[graph]") {
  CHECK(max_degree(gen_star(5)) == 5);
  CHECK(max_degree(gen_gm(2)) == 4);
  CHECK(max_degree(gen_path(3)) == 2);  // 4 vertices
  CHECK(code_of([] { max_degree(Graph{}); }) == errc::invalid_argument);
}

TEST_CASE("bipartition of even and odd cycles", "[graph]") {
  const auto c4 = gen_cycle(4);
  auto r = bipartition(c4);
  REQUIRE(std::holds_alternative<Bipartition>(r));
  const auto& parts = std::get<Bipartition>(r);
  CHECK(parts.left == std::vector<vertex_id>{c4.index_of("v1"), c4.index_of("v3")});
  CHECK(parts.right == std::vector<vertex_id>{c4.index_of("v2"), c4.index_of("v4")});

  const auto c5 = gen_cycle(5);
  auto odd = bipartition(c5);
  REQUIRE(std::holds_alternative<NotBipartite>(odd));
  const auto& cyc = std::get<NotBipartite>(odd).odd_cycle;
  CHECK(cyc.size() == 5);
}

TEST_CASE("odd cycle witnesses are closed odd cycles of the graph", "[graph][property]") {
  auto adjacent = [](const Graph& g, vertex_id a, vertex_id b) {
    for (const auto& inc : g.incident(a))
      if (inc.neighbor == b) return true;
    return false;
  };
  std::vector<Graph> graphs;
  for (int n = 3; n <= 11; n += 2) graphs.push_back(gen_cycle(n));
  graphs.push_back(build_graph({"a", "b", "c", "d"},
                               {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}}));
  // triangle hanging off a path
  graphs.push_back(build_graph({"p", "q", "r", "s", "u"},
                               {{"p", "q"}, {"q", "r"}, {"r", "s"}, {"s", "u"}, {"u", "r"}}));
  for (const auto& g : graphs) {
    auto r = bipartition(g);
    REQUIRE(std::holds_alternative<NotBipartite>(r));
    const auto& cyc = std::get<NotBipartite>(r).odd_cycle;
    CHECK(cyc.size() % 2 == 1);
    std::set<vertex_id> distinct(cyc.begin(), cyc.end());
    CHECK(distinct.size() == cyc.size());
    for (std::size_t k = 0; k < cyc.size(); ++k)
      CHECK(adjacent(g, cyc[k], cyc[(k + 1) % cyc.size()]));
  }
}

TEST_CASE("bipartition parts are valid when returned", "[graph][property]") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen_random_tree(12, seed);
    auto r = bipartition(g);
    REQUIRE(std::holds_alternative<Bipartition>(r));
    const auto& p = std::get<Bipartition>(r);
    std::vector<int> side(g.vertex_count(), -1);
    for (auto v : p.left) side[v] = 0;
    for (auto v : p.right) side[v] = 1;
    CHECK(p.left.size() + p.right.size() == g.vertex_count());
    for (auto s : side) CHECK(s >= 0);
    for (const auto& e : g.edges()) CHECK(side[e.u] != side[e.v]);
  }
}

TEST_CASE("bipartition rejects disconnected graphs", "[graph]") {
  const auto g = build_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CHECK_FALSE(is_connected(g));
  CHECK(code_of([&] { bipartition(g); }) == errc::disconnected);
}

TEST_CASE("chromatic_index", "[graph]") {
  CHECK(chromatic_index(gen_gm(2)) == 4);
  CHECK(chromatic_index(gen_cycle(5)) == 3);
  CHECK(chromatic_index(gen_cycle(3)) == 3);
  CHECK(chromatic_index(gen_cycle(6)) == 2);
  const auto k4 = build_graph({"a", "b", "c", "d"},
                              {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
  CHECK(chromatic_index(k4) == 3);
  // Petersen graph: class 2.
  std::vector<std::string> vs;
  for (int k = 0; k < 10; ++k) vs.push_back("p" + std::to_string(k));
  std::vector<LabelPair> es;
  for (int k = 0; k < 5; ++k) {
    es.emplace_back(vs[k], vs[(k + 1) % 5]);
    es.emplace_back(vs[k], vs[k + 5]);
    es.emplace_back(vs[k + 5], vs[(k + 2) % 5 + 5]);
  }
  CHECK(chromatic_index(build_graph(vs, es)) == 4);

  CHECK(code_of([&] { chromatic_index(gen_cycle(301)); }) == errc::search_budget_exceeded);
}

TEST_CASE("chromatic index is max degree or one more", "[graph][property]") {
  for (int n = 3; n <= 9; ++n) {
    const auto g = gen_cycle(n);
    const int ci = chromatic_index(g);
    CHECK((ci == 2 || ci == 3));
    CHECK((ci == 2) == (n % 2 == 0));
  }
}
