#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ofc/atlas.hpp"
#include "ofc/canonical.hpp"
#include "ofc/error.hpp"
#include "ofc/graph.hpp"
#include "ofc/moves.hpp"
#include "ofc/pattern.hpp"
#include "ofc/reduction.hpp"
#include "ofc/trace.hpp"

namespace ofc {

using json = nlohmann::json;

// nlohmann objects keep keys sorted, so every dump below is byte-stable for a
// fixed value.

inline json pattern_json(const GluingPattern& p) {
  return json{{"edges", p.edge_count()},
              {"genus", p.genus()},
              {"text", p.serialize()},
              {"vertices", p.vertex_count()},
              {"word", p.word()}};
}

inline json curve_json(const Curve& c) {
  return json{{"edges", c.edges},
              {"length", c.length},
              {"one_simple", c.one_simple},
              {"self_intersections", c.self_intersections}};
}

inline json census_json(const std::vector<VertexInfo>& census) {
  json out = json::array();
  for (const auto& v : census)
    out.push_back(json{{"cycle", v.cycle},
                       {"trisections", v.trisections},
                       {"type", static_cast<int>(v.vtype)}});
  return out;
}

// Everything `info` reports: pattern shape, curve decomposition, S (the
// number of 1-simple curves), and the vertex census at root 0.
inline json info_json(const GluingPattern& p) {
  const CurveDecomposition dec = curve_decomposition(p);
  json curves = json::array();
  for (const auto& c : dec.curves) curves.push_back(curve_json(c));
  const auto census = vertex_census(p, 0);
  int trisections = 0;
  for (const auto& v : census) trisections += v.trisections;
  json out = pattern_json(p);
  out["census"] = census_json(census);
  out["curves"] = curves;
  out["s"] = dec.one_simple_count;
  out["trisections"] = trisections;
  return out;
}

inline json class_json(const CanonicalClass& c) {
  return json{{"aut", c.aut_size},
              {"genus", c.genus},
              {"orbit", c.orbit_size},
              {"text", word_text(c.word)},
              {"word", c.word}};
}

inline json move_json(const MoveRecord& m) {
  return json{{"after", m.after},
              {"args", m.args},
              {"before", m.before},
              {"op", move_op_name(m.op)}};
}

inline json trace_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& m : t.steps) steps.push_back(move_json(m));
  return json{{"markers",
               json{{"almost_toral", t.idx_almost_toral},
                    {"non_simplifiable", t.idx_non_simplifiable},
                    {"toral", t.idx_toral}}},
              {"steps", steps},
              {"surgeries", t.surgery_count()}};
}

inline json extraction_json(const Extraction& e) {
  return json{{"marked", e.marked},
              {"reduced", e.reduced.word()},
              {"reduced_text", e.reduced.serialize()},
              {"trace", trace_json(e.trace)}};
}

inline const char* edge_kind_name(EdgeKind k) {
  return k == EdgeKind::surgery ? "surgery" : "sum";
}

inline json graph_json(const SurgeryGraph& g) {
  json nodes = json::array();
  for (const auto& n : g.nodes) nodes.push_back(class_json(n));
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back(json{{"a", e.a}, {"b", e.b}, {"kind", edge_kind_name(e.kind)}});
  return json{{"edges", edges}, {"nodes", nodes}};
}

inline std::string export_json(const SurgeryGraph& g) { return graph_json(g).dump(2) + "\n"; }

// Inverse of graph_json; the round trip preserves nodes and adjacency.
inline SurgeryGraph graph_from_json(const json& j) {
  SurgeryGraph g;
  for (const auto& n : j.at("nodes")) {
    CanonicalClass c;
    c.word = n.at("word").get<Word>();
    c.orbit_size = n.at("orbit").get<int>();
    c.aut_size = n.at("aut").get<int>();
    c.genus = n.at("genus").get<int>();
    g.nodes.push_back(std::move(c));
  }
  for (const auto& e : j.at("edges")) {
    SurgeryGraph::Edge edge;
    edge.a = e.at("a").get<int>();
    edge.b = e.at("b").get<int>();
    const std::string kind = e.at("kind").get<std::string>();
    if (kind == "surgery")
      edge.kind = EdgeKind::surgery;
    else if (kind == "sum")
      edge.kind = EdgeKind::sum;
    else
      fail(Errc::bad_argument, "unknown edge kind: " + kind);
    if (edge.a < 0 || edge.b < 0 || edge.a >= static_cast<int>(g.nodes.size()) ||
        edge.b >= static_cast<int>(g.nodes.size()))
      fail(Errc::bad_argument, "edge endpoint out of range");
    g.edges.push_back(edge);
  }
  return g;
}

}  // namespace ofc
