#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ofc/atlas.hpp"
#include "ofc/canonical.hpp"
#include "ofc/error.hpp"
#include "ofc/moves.hpp"
#include "ofc/parallel.hpp"

namespace ofc {

enum class EdgeKind { surgery, sum };

// Surgery graph: nodes are canonical classes, edges are single moves.
// K_g has one level; the hat variant stacks levels 1..g and adds sum edges.
struct SurgeryGraph {
  struct Edge {
    int a = 0, b = 0;
    EdgeKind kind = EdgeKind::surgery;
  };

  std::vector<CanonicalClass> nodes;  // sorted by (genus, word)
  std::vector<Edge> edges;            // a < b, sorted, no duplicates

  int index_of(const Word& w) const {
    for (size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].word == w) return static_cast<int>(i);
    return -1;
  }

  std::vector<std::vector<int>> adjacency(bool surgery_only = false) const {
    std::vector<std::vector<int>> adj(nodes.size());
    for (const auto& e : edges) {
      if (surgery_only && e.kind != EdgeKind::surgery) continue;
      adj[static_cast<size_t>(e.a)].push_back(e.b);
      adj[static_cast<size_t>(e.b)].push_back(e.a);
    }
    return adj;
  }
};

// Distinct canonical classes reachable from p by one surgery, own class
// excluded, sorted.
inline std::vector<CanonicalClass> neighbors(const GluingPattern& p) {
  const CanonicalClass self = canonicalize(p);
  std::set<CanonicalClass> out;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j) {
      if (j == p.alpha(i)) continue;
      if (!is_intertwined(p, i, j)) continue;
      CanonicalClass c = canonicalize(surgery(p, i, j));
      if (!(c == self)) out.insert(std::move(c));
    }
  return {out.begin(), out.end()};
}

namespace detail {

inline void add_surgery_edges(SurgeryGraph& graph, const std::map<Word, int>& index, int threads) {
  std::vector<std::vector<std::pair<int, int>>> found(graph.nodes.size());
  parallel_for_index(static_cast<int>(graph.nodes.size()), threads, [&](int v) {
    const GluingPattern p = GluingPattern::from_word(graph.nodes[static_cast<size_t>(v)].word);
    for (const auto& c : neighbors(p)) {
      auto it = index.find(c.word);
      OFC_ASSERT(it != index.end(), "surgery stays within the same genus atlas");
      if (it->second != v)
        found[static_cast<size_t>(v)].emplace_back(std::min(v, it->second),
                                                   std::max(v, it->second));
    }
  });
  std::set<std::pair<int, int>> dedup;
  for (const auto& per_node : found)
    for (auto e : per_node) dedup.insert(e);
  for (auto [a, b] : dedup) graph.edges.push_back(SurgeryGraph::Edge{a, b, EdgeKind::surgery});
}

}  // namespace detail

inline SurgeryGraph build_surgery_graph(int g, int threads = 1) {
  SurgeryGraph graph;
  for (auto& rec : enumerate_classes(g, threads)) graph.nodes.push_back(std::move(rec.cls));
  std::map<Word, int> index;
  for (size_t i = 0; i < graph.nodes.size(); ++i)
    index[graph.nodes[i].word] = static_cast<int>(i);
  detail::add_surgery_edges(graph, index, threads);
  return graph;
}

// Levels 1..g with surgery edges inside each level and a sum edge from every
// marked edge of every class to the class one level up.
inline SurgeryGraph build_hat_graph(int g, int threads = 1) {
  SurgeryGraph graph;
  for (int level = 1; level <= g; ++level)
    for (auto& rec : enumerate_classes(level, threads)) graph.nodes.push_back(std::move(rec.cls));
  std::map<Word, int> index;
  for (size_t i = 0; i < graph.nodes.size(); ++i)
    index[graph.nodes[i].word] = static_cast<int>(i);
  detail::add_surgery_edges(graph, index, threads);

  std::vector<std::vector<std::pair<int, int>>> found(graph.nodes.size());
  parallel_for_index(static_cast<int>(graph.nodes.size()), threads, [&](int v) {
    const auto& cls = graph.nodes[static_cast<size_t>(v)];
    if (cls.genus >= g) return;
    const GluingPattern p = GluingPattern::from_word(cls.word);
    for (int x = 0; x < p.size(); ++x) {
      CanonicalClass up = canonicalize(connected_sum(p, x, torus_pattern(), 0));
      auto it = index.find(up.word);
      OFC_ASSERT(it != index.end(), "a torus sum lands one level up");
      found[static_cast<size_t>(v)].emplace_back(v, it->second);
    }
  });
  std::set<std::pair<int, int>> dedup;
  for (const auto& per_node : found)
    for (auto [a, b] : per_node) dedup.insert({std::min(a, b), std::max(a, b)});
  for (auto [a, b] : dedup) graph.edges.push_back(SurgeryGraph::Edge{a, b, EdgeKind::sum});
  std::sort(graph.edges.begin(), graph.edges.end(), [](const auto& x, const auto& y) {
    return std::tie(x.a, x.b, x.kind) < std::tie(y.a, y.b, y.kind);
  });
  return graph;
}

namespace detail {

inline std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int source) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> queue{source};
  dist[static_cast<size_t>(source)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[static_cast<size_t>(v)])
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

}  // namespace detail

// Exact diameter of the genus-`level` slice under surgery edges only.
inline int diameter(const SurgeryGraph& graph, int level, int threads = 1) {
  std::vector<int> members;
  for (size_t i = 0; i < graph.nodes.size(); ++i)
    if (graph.nodes[i].genus == level) members.push_back(static_cast<int>(i));
  if (members.empty()) fail(Errc::bad_argument, "no classes at genus " + std::to_string(level));
  std::vector<int> local(graph.nodes.size(), -1);
  for (size_t k = 0; k < members.size(); ++k)
    local[static_cast<size_t>(members[k])] = static_cast<int>(k);
  std::vector<std::vector<int>> adj(members.size());
  for (const auto& e : graph.edges) {
    if (e.kind != EdgeKind::surgery) continue;
    int a = local[static_cast<size_t>(e.a)], b = local[static_cast<size_t>(e.b)];
    if (a < 0 || b < 0) continue;
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  std::vector<int> ecc(members.size(), 0);
  std::vector<char> bad(members.size(), 0);
  parallel_for_index(static_cast<int>(members.size()), threads, [&](int s) {
    auto dist = detail::bfs_distances(adj, s);
    int far = 0;
    for (int d : dist) {
      if (d < 0) {
        bad[static_cast<size_t>(s)] = 1;
        return;
      }
      far = std::max(far, d);
    }
    ecc[static_cast<size_t>(s)] = far;
  });
  for (char b : bad)
    if (b) fail(Errc::disconnected, "genus " + std::to_string(level) + " slice is disconnected");
  return *std::max_element(ecc.begin(), ecc.end());
}

inline bool is_connected(const SurgeryGraph& graph, bool surgery_only = false) {
  if (graph.nodes.empty()) return true;
  auto dist = detail::bfs_distances(graph.adjacency(surgery_only), 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

// Half the 1-simple count gap; every surgery moves S by at most 2, so this
// bounds the surgery distance from below. Exact for the values involved.
inline double s_lower_bound(const GluingPattern& p1, const GluingPattern& p2) {
  int d = one_simple_count(p1) - one_simple_count(p2);
  return std::abs(d) / 2.0;
}

// Deterministic Graphviz rendering; node order and edge order are fixed by
// the graph's sorted layout.
inline std::string export_dot(const SurgeryGraph& graph) {
  std::string out = "graph surgery_graph {\n";
  for (size_t i = 0; i < graph.nodes.size(); ++i) {
    const auto& n = graph.nodes[i];
    out += "  n" + std::to_string(i) + " [label=\"" +
           GluingPattern::from_word(n.word).serialize() + "\" genus=" + std::to_string(n.genus) +
           "];\n";
  }
  for (const auto& e : graph.edges) {
    out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) + " [kind=" +
           (e.kind == EdgeKind::sum ? "sum" : "surgery") + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ofc
