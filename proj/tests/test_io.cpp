#include <catch2/catch_amalgamated.hpp>

#include "cic/families.hpp"
#include "cic/io.hpp"

using namespace cic;

TEST_CASE("graph JSON round trip keeps edge order", "[io][property]") {
  std::vector<Graph> graphs{gen_gm(2), gen_gm(4), gen_cycle(7), gen_random_tree(11, 5),
                            gen_complete_bipartite(3, 2)};
  for (const auto& g : graphs) {
    const auto text = to_json(g).dump();
    const auto back = graph_from_json(json::parse(text));
    CHECK(back == g);
    CHECK(to_json(back).dump() == text);
  }
}

TEST_CASE("graph JSON layout", "[io]") {
  const auto j = to_json(gen_path(1));
  CHECK(j.dump() == R"({"vertices":["v1","v2"],"edges":[["v1","v2"]]})");
}

TEST_CASE("malformed graph JSON is a format error", "[io]") {
  auto code = [](const std::string& text) {
    try {
      graph_from_json(json::parse(text));
    } catch (const error& e) {
      return e.code();
    }
    return errc::invalid_argument;
  };
  CHECK(code(R"({"vertices":["a"]})") == errc::format_error);
  CHECK(code(R"({"vertices":["a","b"],"edges":[["a"]]})") == errc::format_error);
  CHECK(code(R"({"vertices":[1,2],"edges":[]})") == errc::format_error);
  CHECK(code(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})") == errc::duplicate_edge);
}

TEST_CASE("coloring JSON", "[io]") {
  const Coloring c{3, {1, 2, 1, 2, 3}};
  CHECK(to_json(c).dump() == R"({"t":3,"colors":[1,2,1,2,3]})");
  CHECK(coloring_from_json(to_json(c)) == c);
  CHECK_THROWS_AS(coloring_from_json(json::parse(R"({"t":"x","colors":[]})")), error);
}

TEST_CASE("verdict JSON is stable", "[io]") {
  const auto g = gen_path(4);
  const Coloring c{4, {1, 3, 1, 4}};
  const auto a = to_json(check_cyclically_interval(g, c), g).dump();
  const auto b = to_json(check_cyclically_interval(g, c), g).dump();
  CHECK(a == b);
  const auto j = json::parse(a);
  CHECK(j["ok"] == false);
  CHECK(j["failures"][0]["kind"] == "ColorUnused");
  CHECK(j["failures"][1]["kind"] == "BadPalette");
  CHECK(j["failures"][1]["vertex"] == "v2");
}

TEST_CASE("audit report JSON", "[io]") {
  const auto j = to_json(audit({7, 0}));
  CHECK(j["pass"] == false);
  CHECK(j["limiting_step"] == "S2");
  CHECK(j["steps"].size() == 6);
  CHECK(j["steps"][1]["witnesses"]["floor_m2_half"] == 24);
}

TEST_CASE("DOT export labels edges with colors", "[io]") {
  const auto g = gen_path(2);
  const Coloring c{2, {1, 2}};
  const auto dot = to_dot(g, &c);
  CHECK(dot.find("\"v1\" -- \"v2\" [label=\"e0:1\"];") != std::string::npos);
  CHECK(dot.find("\"v2\" -- \"v3\" [label=\"e1:2\"];") != std::string::npos);
  CHECK(to_dot(g).find("label=\"e0\"") != std::string::npos);
}
