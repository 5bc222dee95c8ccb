#include <cstdlib>

#include "doctest.h"
#include "ofc/canonical.hpp"
#include "ofc/moves.hpp"

using namespace ofc;

namespace {
const char* kTorus = "1 2 -1 -2";
const char* kNecklace2 = "1 2 -1 3 -2 -3 4 5 -4 6 -5 -6";
}  // namespace

TEST_CASE("the torus has no intertwined pair") {
  const GluingPattern p = GluingPattern::parse(kTorus);
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (j != p.alpha(i)) CHECK_FALSE(is_intertwined(p, i, j));
  try {
    surgery(p, 0, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_intertwined);
  }
  try {
    surgery(p, 0, 2);  // both sides of the same edge
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::same_edge);
  }
}

TEST_CASE("torus curves: two curves, both 1-simple") {
  const GluingPattern p = GluingPattern::parse(kTorus);
  const CurveDecomposition dec = curve_decomposition(p);
  REQUIRE(dec.curves.size() == 2);
  for (const auto& c : dec.curves) {
    CHECK(c.length == 1);
    CHECK(c.self_intersections == 0);
    CHECK(c.one_simple);
  }
  CHECK(dec.one_simple_count == 2);
  CHECK(one_simple_count(p) == 2);
}

TEST_CASE("torus census at root 0: one Type 2 vertex carrying both trisections") {
  const auto census = vertex_census(GluingPattern::parse(kTorus), 0);
  REQUIRE(census.size() == 1);
  CHECK(census[0].vtype == VertexType::type2);
  CHECK(census[0].trisections == 2);
}

TEST_CASE("two-bead necklace: three curves, one with a self-intersection") {
  const GluingPattern p = GluingPattern::parse(kNecklace2);
  CHECK(p.genus() == 2);
  const CurveDecomposition dec = curve_decomposition(p);
  REQUIRE(dec.curves.size() == 3);
  CHECK(dec.one_simple_count == 2);
  int fat = 0;
  for (const auto& c : dec.curves)
    if (!c.one_simple) {
      ++fat;
      CHECK(c.self_intersections == 1);
      CHECK(c.length == 4);
    }
  CHECK(fat == 1);
}

TEST_CASE("trisection totals equal 2g at every root") {
  for (const char* text : {kTorus, kNecklace2}) {
    const GluingPattern p = GluingPattern::parse(text);
    for (int root = 0; root < p.size(); ++root) {
      int total = 0;
      for (const auto& v : vertex_census(p, root)) total += v.trisections;
      CHECK(total == 2 * p.genus());
    }
  }
}

TEST_CASE("surgery preserves genus and obeys the mirror and involution laws") {
  const GluingPattern p = GluingPattern::parse(kNecklace2);
  const CanonicalClass home = canonicalize(p);
  int pairs = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j) {
      if (j == p.alpha(i) || !is_intertwined(p, i, j)) continue;
      ++pairs;
      const Surgered q = surgery_full(p, i, j);
      CHECK(q.pattern.genus() == p.genus());
      CHECK(std::abs(one_simple_count(q.pattern) - one_simple_count(p)) <= 2);
      CHECK(surgery(p, p.alpha(i), p.alpha(j)).word() == q.pattern.word());
      CHECK(canonicalize(surgery(q.pattern, q.new_x, q.new_y)).word == home.word);
    }
  CHECK(pairs > 0);
}

TEST_CASE("a simplification cascade raises S one admissible step at a time") {
  const GluingPattern start = GluingPattern::parse("1 2 3 -1 4 -2 5 6 -4 -5 -3 -6");
  REQUIRE(find_simplification(start).has_value());
  const auto [end, trace] = simplify_cascade(start);
  CHECK_FALSE(find_simplification(end).has_value());
  CHECK(one_simple_count(end) > one_simple_count(start));
  CHECK(trace.idx_non_simplifiable == static_cast<int>(trace.steps.size()));
  REQUIRE(!trace.steps.empty());
  for (size_t k = 0; k + 1 < trace.steps.size(); ++k)
    CHECK(trace.steps[k].after == trace.steps[k + 1].before);
  CHECK(trace.steps.front().before == start.word());
  CHECK(trace.steps.back().after == end.word());
}

TEST_CASE("connected sum of two tori is the two-bead necklace") {
  const GluingPattern t = torus_pattern();
  const GluingPattern sum = connected_sum(t, 0, t, 0);
  CHECK(sum.genus() == 2);
  CHECK(sum.serialize() == kNecklace2);
}

TEST_CASE("splitting a torus block undoes the connected sum") {
  const GluingPattern t = torus_pattern();
  const GluingPattern sum = connected_sum(t, 0, t, 0);
  const auto blocks = find_torus_blocks(sum);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == 0);
  CHECK(blocks[1] == 6);
  for (int q : blocks) {
    const SplitResult split = split_torus_summand(sum, q);
    CHECK(split.pattern.genus() == 1);
    const GluingPattern rebuilt = connected_sum(split.pattern, split.marked, t, 0);
    CHECK(canonicalize(rebuilt).word == canonicalize(sum).word);
  }
  try {
    split_torus_summand(t, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_block);
  }
}
