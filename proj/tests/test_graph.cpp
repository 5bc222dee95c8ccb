#include "doctest.h"
#include "ofc/graph.hpp"
#include "ofc/jsonio.hpp"

using namespace ofc;

TEST_CASE("the torus class has no surgery neighbors") {
  CHECK(neighbors(torus_pattern()).empty());
}

TEST_CASE("genus-2 surgery graph: 6 nodes, 7 edges, connected, diameter 3") {
  const SurgeryGraph k2 = build_surgery_graph(2);
  REQUIRE(k2.nodes.size() == 6);
  CHECK(k2.edges.size() == 7);
  CHECK(is_connected(k2));
  CHECK(diameter(k2, 2) == 3);
  for (const auto& e : k2.edges) {
    CHECK(e.a < e.b);
    CHECK(e.kind == EdgeKind::surgery);
  }
  for (size_t i = 1; i < k2.edges.size(); ++i) {
    const auto &prev = k2.edges[i - 1], &cur = k2.edges[i];
    CHECK(std::pair(prev.a, prev.b) < std::pair(cur.a, cur.b));
  }
}

TEST_CASE("hat graph at genus 2 stacks the torus level and one sum edge") {
  const SurgeryGraph h2 = build_hat_graph(2);
  REQUIRE(h2.nodes.size() == 7);
  CHECK(h2.edges.size() == 8);
  CHECK(is_connected(h2));
  int sum_edges = 0;
  for (const auto& e : h2.edges) sum_edges += e.kind == EdgeKind::sum;
  CHECK(sum_edges == 1);
  CHECK(h2.nodes[0].genus == 1);
  // the surgery-only restriction leaves the torus level isolated
  CHECK_FALSE(is_connected(h2, /*surgery_only=*/true));
}

TEST_CASE("the distance lower bound is |dS|/2") {
  const GluingPattern a = GluingPattern::parse("1 2 -1 3 -2 -3 4 5 -4 6 -5 -6");
  CHECK(s_lower_bound(a, a) == 0.0);
  CHECK(s_lower_bound(a, torus_pattern()) == 0.0);  // both have S = 2
}

TEST_CASE("DOT export is deterministic and carries labels and edge kinds") {
  const SurgeryGraph h2 = build_hat_graph(2);
  const std::string dot = export_dot(h2);
  CHECK(dot == export_dot(h2));
  CHECK(dot.rfind("graph surgery_graph {", 0) == 0);
  CHECK(dot.find("label=\"1 2 -1 -2\"") != std::string::npos);
  CHECK(dot.find("kind=surgery") != std::string::npos);
  CHECK(dot.find("kind=sum") != std::string::npos);
}

TEST_CASE("JSON export round trips nodes, edges and adjacency byte-for-byte") {
  const SurgeryGraph h2 = build_hat_graph(2);
  const std::string js = export_json(h2);
  CHECK(js == export_json(h2));
  const SurgeryGraph back = graph_from_json(json::parse(js));
  CHECK(export_json(back) == js);
  REQUIRE(back.nodes.size() == h2.nodes.size());
  for (size_t i = 0; i < h2.nodes.size(); ++i) {
    CHECK(back.nodes[i].word == h2.nodes[i].word);
    CHECK(back.nodes[i].orbit_size == h2.nodes[i].orbit_size);
  }
  CHECK(back.adjacency() == h2.adjacency());
}

TEST_CASE("graph JSON rejects malformed input") {
  SurgeryGraph g = build_surgery_graph(2);
  json j = graph_json(g);
  j["edges"][0]["kind"] = "teleport";
  CHECK_THROWS_AS(graph_from_json(j), Error);
  j["edges"][0]["kind"] = "surgery";
  j["edges"][0]["b"] = 99;
  CHECK_THROWS_AS(graph_from_json(j), Error);
}
