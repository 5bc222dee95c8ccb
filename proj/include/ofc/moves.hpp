#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ofc/error.hpp"
#include "ofc/pattern.hpp"
#include "ofc/trace.hpp"

namespace ofc {

// ---------------------------------------------------------------------------
// Intertwining and surgery
// ---------------------------------------------------------------------------

// Two edges intertwine when exactly one endpoint side of one lies strictly
// between the sides of the other along the face: the word matches
// w1 x w2 xbar w3 y w4 ybar up to rotation.
inline bool is_intertwined(const GluingPattern& p, int i, int j) {
  if (j == i || j == p.alpha(i))
    fail(Errc::same_edge, "positions " + std::to_string(i) + " and " + std::to_string(j) +
                              " lie on the same edge");
  const int oj = p.order_index(i, j);
  const bool ai_inside = p.order_index(i, p.alpha(i)) < oj;
  const bool aj_inside = p.order_index(i, p.alpha(j)) < oj;
  return ai_inside != aj_inside;
}

struct Surgered {
  GluingPattern pattern;
  int new_x;  // position of the first replacement letter
  int new_y;  // position of the second
};

// Surgery on intertwined edges: w1 x w2 xbar w3 y w4 ybar becomes
// w3 X w2 Xbar w1 Y w4 Ybar. The move is orientation-normalized so that
// surgery at (i, j) and at (alpha(i), alpha(j)) produce the same word.
inline Surgered surgery_full(const GluingPattern& p, int i, int j) {
  if (!is_intertwined(p, i, j))
    fail(Errc::not_intertwined, "positions " + std::to_string(i) + " and " + std::to_string(j) +
                                    " do not intertwine");
  const int n = p.size();
  // Arrange roles so the cyclic order from x is (x, xbar, y, ybar).
  int x = i, y = j;
  if (p.order_index(i, p.alpha(i)) > p.order_index(i, j)) {
    x = p.alpha(i);
    y = p.alpha(j);
  }
  const int xb = p.alpha(x), yb = p.alpha(y);
  auto segment = [&](int from, int to) {  // letters strictly between from and to
    Word seg;
    for (int q = (from + 1) % n; q != to; q = (q + 1) % n) seg.push_back(p.label(q));
    return seg;
  };
  const Word w2 = segment(x, xb);
  const Word w3 = segment(xb, y);
  const Word w4 = segment(y, yb);
  const Word w1 = segment(yb, x);
  const int lx = p.edge_of(x), ly = p.edge_of(y);

  Word out;
  out.reserve(static_cast<size_t>(n));
  out.insert(out.end(), w3.begin(), w3.end());
  const int pos_x = static_cast<int>(out.size());
  out.push_back(lx);
  out.insert(out.end(), w2.begin(), w2.end());
  out.push_back(-lx);
  out.insert(out.end(), w1.begin(), w1.end());
  const int pos_y = static_cast<int>(out.size());
  out.push_back(ly);
  out.insert(out.end(), w4.begin(), w4.end());
  out.push_back(-ly);
  return Surgered{GluingPattern::from_word(std::move(out)), pos_x, pos_y};
}

inline GluingPattern surgery(const GluingPattern& p, int i, int j) {
  return surgery_full(p, i, j).pattern;
}

inline int next_on_curve(const GluingPattern& p, int pos) { return p.next_on_curve(pos); }

// ---------------------------------------------------------------------------
// Curve decomposition
// ---------------------------------------------------------------------------

struct Curve {
  std::vector<int> edges;     // edge labels in traversal order from the least side
  int length = 0;             // number of edges
  int self_intersections = 0;
  bool one_simple = false;    // single edge crossing the rest of the collection once
};

struct CurveDecomposition {
  std::vector<Curve> curves;            // ordered by least side position
  std::vector<int> curve_of_edge;       // edge label (1-based) -> curve index
  int one_simple_count = 0;
};

// Orbits of C partition the sides; an orbit and its alpha-image project to the
// same edge set, so each curve owns exactly two orbits.
inline CurveDecomposition curve_decomposition(const GluingPattern& p) {
  const int n = p.size();
  CurveDecomposition dec;
  dec.curve_of_edge.assign(static_cast<size_t>(p.edge_count()) + 1, -1);
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)] || dec.curve_of_edge[static_cast<size_t>(p.edge_of(s))] >= 0)
      continue;
    Curve c;
    int q = s;
    do {
      seen[static_cast<size_t>(q)] = 1;
      seen[static_cast<size_t>(p.alpha(q))] = 1;
      c.edges.push_back(p.edge_of(q));
      dec.curve_of_edge[static_cast<size_t>(p.edge_of(q))] = static_cast<int>(dec.curves.size());
      q = p.next_on_curve(q);
    } while (q != s);
    c.length = static_cast<int>(c.edges.size());
    c.one_simple = (c.length == 1);
    if (c.one_simple) ++dec.one_simple_count;
    dec.curves.push_back(std::move(c));
  }
  // Strand pairs at each vertex are the mu-opposite sides; a vertex where both
  // strands belong to one curve is a self-intersection of that curve.
  for (const auto& cyc : p.vertex_cycles()) {
    int c0 = dec.curve_of_edge[static_cast<size_t>(p.edge_of(cyc[0]))];
    int c1 = dec.curve_of_edge[static_cast<size_t>(p.edge_of(cyc[1]))];
    OFC_ASSERT(c0 == dec.curve_of_edge[static_cast<size_t>(p.edge_of(cyc[2]))] &&
                   c1 == dec.curve_of_edge[static_cast<size_t>(p.edge_of(cyc[3]))],
               "strand sides at a vertex pair up across the same curve");
    if (c0 == c1) ++dec.curves[static_cast<size_t>(c0)].self_intersections;
  }
  return dec;
}

inline int one_simple_count(const GluingPattern& p) {
  int s = 0;
  for (int q = 0; q < p.size(); ++q)
    if (p.next_on_curve(q) == q) ++s;
  return s / 2;  // both sides of a 1-simple edge are fixed by C
}

// ---------------------------------------------------------------------------
// Vertex census
// ---------------------------------------------------------------------------

enum class VertexType { type1 = 1, type2 = 2, type3 = 3 };

struct VertexInfo {
  std::array<int, 4> cycle;  // mu-order, rotated so cycle[0] has minimal order
  VertexType vtype;
  int trisections = 0;       // descents after the minimum; total over vertices is 2g
};

inline std::vector<VertexInfo> vertex_census(const GluingPattern& p, int root) {
  std::vector<VertexInfo> out;
  for (const auto& cyc : p.vertex_cycles()) {
    std::array<int, 4> ord{};
    int best = 0;
    for (int k = 0; k < 4; ++k) {
      ord[static_cast<size_t>(k)] = p.order_index(root, cyc[static_cast<size_t>(k)]);
      if (ord[static_cast<size_t>(k)] < ord[static_cast<size_t>(best)]) best = k;
    }
    VertexInfo v{};
    std::array<int, 4> o{};
    for (int k = 0; k < 4; ++k) {
      v.cycle[static_cast<size_t>(k)] = cyc[static_cast<size_t>((best + k) % 4)];
      o[static_cast<size_t>(k)] = ord[static_cast<size_t>((best + k) % 4)];
    }
    v.trisections = (o[1] > o[2] ? 1 : 0) + (o[2] > o[3] ? 1 : 0);
    v.vtype = v.trisections == 0 ? VertexType::type1
                                 : (v.trisections == 2 ? VertexType::type2 : VertexType::type3);
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simplification
// ---------------------------------------------------------------------------

// A simplification is surgery at (h, C(h)); it raises the 1-simple count by
// one. Returns the least h whose pair is admissible.
// A simplification pair is (h, C(h)) where h is not on a 1-simple curve and
// the two sides are intertwined on distinct edges. Surgery on such a pair
// always closes the rewired strand into a new 1-simple curve; occasionally a
// positional coincidence closes the second strand too, yielding +2 instead of
// +1. Prefer a pair that creates exactly one new 1-simple curve, falling back
// to any admissible pair (the count still strictly increases, so cascades
// terminate either way).
inline std::optional<int> find_simplification(const GluingPattern& p) {
  std::optional<int> fallback;
  const int before_s = one_simple_count(p);
  for (int h = 0; h < p.size(); ++h) {
    const int c = p.next_on_curve(h);
    if (c == h || c == p.alpha(h)) continue;
    if (!is_intertwined(p, h, c)) continue;
    if (!fallback) fallback = h;
    if (one_simple_count(surgery(p, h, c)) == before_s + 1) return h;
  }
  return fallback;
}

inline std::pair<GluingPattern, ReductionTrace> simplify_cascade(const GluingPattern& start) {
  GluingPattern p = start;
  ReductionTrace trace;
  while (auto h = find_simplification(p)) {
    const int c = p.next_on_curve(*h);
    const int before_s = one_simple_count(p);
    GluingPattern q = surgery(p, *h, c);
    OFC_ASSERT(one_simple_count(q) > before_s,
               "a simplification step raises the 1-simple count");
    trace.steps.push_back(
        MoveRecord{MoveRecord::Op::simplify, {*h, c}, p.word(), q.word()});
    p = std::move(q);
  }
  trace.idx_non_simplifiable = static_cast<int>(trace.steps.size());
  return {std::move(p), std::move(trace)};
}

// ---------------------------------------------------------------------------
// Connected sum and torus summands
// ---------------------------------------------------------------------------

namespace detail {

// Sum word: rotate p1 to its marked edge x = w(i), p2 to y = w'(j), then
// x1 w1 x1bar x2 w2 x2bar y1 w'1 y1bar y2 w'2 y2bar. position_map (if given)
// receives, for every position of p1 other than the marked sides, its
// position in the sum.
inline GluingPattern connected_sum_impl(const GluingPattern& p1, int i, const GluingPattern& p2,
                                        int j, std::vector<int>* position_map) {
  const int n1 = p1.size(), n2 = p2.size();
  const int shift = p1.edge_count();  // p2 labels move to E1+1 .. E1+E2
  Word out;
  out.reserve(static_cast<size_t>(n1 + n2 + 4));
  if (position_map) position_map->assign(static_cast<size_t>(n1), -1);
  const int xb1 = p1.alpha(i);
  const int extra = p1.edge_count() + p2.edge_count() + 1;

  auto push1 = [&](int pos) {
    if (position_map) (*position_map)[static_cast<size_t>(pos)] = static_cast<int>(out.size());
    out.push_back(p1.label(pos));
  };
  out.push_back(extra);  // x1
  for (int q = p1.gamma(i); q != xb1; q = p1.gamma(q)) push1(q);
  out.push_back(-extra);  // x1bar
  out.push_back(extra + 1);  // x2
  for (int q = p1.gamma(xb1); q != i; q = p1.gamma(q)) push1(q);
  out.push_back(-(extra + 1));  // x2bar
  const int yb2 = p2.alpha(j);
  auto lab2 = [&](int pos) {
    int v = p2.label(pos);
    return v > 0 ? v + shift : v - shift;
  };
  out.push_back(extra + 2);  // y1
  for (int q = p2.gamma(j); q != yb2; q = p2.gamma(q)) out.push_back(lab2(q));
  out.push_back(-(extra + 2));  // y1bar
  out.push_back(extra + 3);  // y2
  for (int q = p2.gamma(yb2); q != j; q = p2.gamma(q)) out.push_back(lab2(q));
  out.push_back(-(extra + 3));  // y2bar

  GluingPattern sum = GluingPattern::from_word(std::move(out));
  OFC_ASSERT(sum.genus() == p1.genus() + p2.genus() &&
                 sum.vertex_count() == p1.vertex_count() + p2.vertex_count() + 1,
             "a connected sum adds genus and gains one vertex");
  return sum;
}

}  // namespace detail

// Connected sum of (p1, edge at i) and (p2, edge at j). Both marked edges are
// doubled and the two doubles interleave, creating one new vertex.
inline GluingPattern connected_sum(const GluingPattern& p1, int i, const GluingPattern& p2,
                                   int j) {
  return detail::connected_sum_impl(p1, i, p2, j, nullptr);
}

inline const GluingPattern& torus_pattern() {
  static const GluingPattern t = GluingPattern::from_word({1, 2, -1, -2});
  return t;
}

// A torus block is six consecutive positions q..q+5 pairing as
// (q,q+2), (q+1,q+4), (q+3,q+5), framed by an interleaved doubled edge:
// alpha(q-1) = t with alpha(t-1) = q+6. Blocks are exactly the visible
// torus summands of the pattern, for every rotation of the word.
inline std::vector<int> find_torus_blocks(const GluingPattern& p) {
  std::vector<int> blocks;
  const int n = p.size();
  if (n < 12) return blocks;
  auto at = [&](int q) { return ((q % n) + n) % n; };
  for (int q = 0; q < n; ++q) {
    if (p.alpha(q) != at(q + 2)) continue;
    if (p.alpha(at(q + 1)) != at(q + 4)) continue;
    if (p.alpha(at(q + 3)) != at(q + 5)) continue;
    const int t = p.alpha(at(q - 1));
    if (p.alpha(at(t - 1)) != at(q + 6)) continue;
    blocks.push_back(q);
  }
  return blocks;
}

struct SplitResult {
  GluingPattern pattern;  // the complementary summand, genus one less
  int marked = 0;         // position of the merged frame edge in `pattern`
};

// Removes the torus block at q and merges the frame's doubled edge back into
// one marked edge; inverse of connected_sum with a torus at that edge.
inline SplitResult split_torus_summand(const GluingPattern& p, int q) {
  auto blocks = find_torus_blocks(p);
  if (std::find(blocks.begin(), blocks.end(), q) == blocks.end())
    fail(Errc::not_a_block, "no framed torus block at position " + std::to_string(q));
  const int n = p.size();
  auto at = [&](int x) { return ((x % n) + n) % n; };
  const int x2b = at(q - 1);
  const int x2 = p.alpha(x2b);
  const int x1b = at(x2 - 1);
  const int x1 = p.alpha(x1b);  // == q+6 (mod n), start of the remainder
  OFC_ASSERT(x1 == at(q + 6), "block frame closes right after the block");
  Word out;
  out.reserve(static_cast<size_t>(n - 8));
  const int merged = p.edge_of(x1);
  out.push_back(merged);  // x
  for (int s = p.gamma(x1); s != x1b; s = p.gamma(s)) out.push_back(p.label(s));
  out.push_back(-merged);  // xbar
  for (int s = p.gamma(x2); s != x2b; s = p.gamma(s)) out.push_back(p.label(s));
  return SplitResult{GluingPattern::from_word(std::move(out)), 0};
}

}  // namespace ofc
