#include "doctest.h"
#include "ofc/atlas.hpp"
#include "ofc/canonical.hpp"
#include "ofc/families.hpp"
#include "ofc/reduction.hpp"

using namespace ofc;

TEST_CASE("the two-bead necklace is already toral") {
  const GluingPattern p = GluingPattern::parse("1 2 -1 3 -2 -3 4 5 -4 6 -5 -6");
  const StagePredicates flags = stage_predicates(p);
  CHECK(flags.non_simplifiable);
  CHECK(flags.almost_toral);
  CHECK(flags.toral);
  const auto [q, trace] = to_toral(p);
  CHECK(q == p);
  CHECK(trace.steps.empty());
  CHECK(trace.idx_non_simplifiable == 0);
  CHECK(trace.idx_almost_toral == 0);
  CHECK(trace.idx_toral == 0);
}

TEST_CASE("to_toral reaches a toral pattern and stamps stage markers in order") {
  for (const auto& rec : enumerate_classes(2)) {
    const auto [q, trace] = to_toral(GluingPattern::from_word(rec.cls.word));
    CHECK(stage_predicates(q).toral);
    CHECK(q.genus() == 2);
    REQUIRE(trace.idx_toral >= 0);
    CHECK(trace.idx_non_simplifiable >= 0);
    CHECK(trace.idx_non_simplifiable <= trace.idx_almost_toral);
    CHECK(trace.idx_almost_toral <= trace.idx_toral);
    CHECK(trace.idx_toral <= static_cast<int>(trace.steps.size()));
  }
}

TEST_CASE("extraction removes one torus summand from every genus-2 class") {
  const GluingPattern torus = torus_pattern();
  for (const auto& rec : enumerate_classes(2)) {
    const Extraction ex = extract_torus_summand(GluingPattern::from_word(rec.cls.word));
    CHECK(ex.reduced.genus() == 1);
    CHECK(ex.reduced == torus);
    CHECK(ex.trace.surgery_count() <= 5);
    REQUIRE(!ex.trace.steps.empty());
    CHECK(ex.trace.steps.back().op == MoveRecord::Op::split);
    const GluingPattern ready = GluingPattern::from_word(ex.trace.steps.back().before);
    const GluingPattern rebuilt = connected_sum(ex.reduced, ex.marked, torus, 0);
    CHECK(canonicalize(rebuilt).word == canonicalize(ready).word);
  }
}

TEST_CASE("a genus-3 pattern reduces to the torus in two extraction levels") {
  GluingPattern p = necklace(3);
  const Extraction first = extract_torus_summand(p);
  CHECK(first.reduced.genus() == 2);
  CHECK(first.trace.surgery_count() <= 8);
  const Extraction second = extract_torus_summand(first.reduced);
  CHECK(second.reduced.genus() == 1);
  CHECK(second.trace.surgery_count() <= 5);
}

TEST_CASE("trace steps chain: after of one step is before of the next") {
  const GluingPattern p = GluingPattern::parse("1 2 3 -1 4 -2 5 6 -4 -5 -3 -6");
  const Extraction ex = extract_torus_summand(p);
  const auto& steps = ex.trace.steps;
  REQUIRE(!steps.empty());
  CHECK(steps.front().before == p.word());
  for (size_t k = 0; k + 1 < steps.size(); ++k) CHECK(steps[k].after == steps[k + 1].before);
}

TEST_CASE("surgery on the base lifts through a connected sum") {
  // Splitting after the lifted move gives the surgered base back.
  const GluingPattern n2 = GluingPattern::parse("1 2 -1 3 -2 -3 4 5 -4 6 -5 -6");
  const GluingPattern sum = connected_sum(n2, 0, torus_pattern(), 0);
  const auto blocks = find_torus_blocks(sum);
  REQUIRE(!blocks.empty());
  const int block = blocks.front();
  const SplitResult base = split_torus_summand(sum, block);
  int i = -1, j = -1;
  for (int a = 0; a < base.pattern.size() && i < 0; ++a)
    for (int b = a + 1; b < base.pattern.size(); ++b)
      if (b != base.pattern.alpha(a) && is_intertwined(base.pattern, a, b)) {
        i = a;
        j = b;
        break;
      }
  REQUIRE(i >= 0);
  const GluingPattern lifted = lift_surgery(sum, block, i, j);
  CHECK(lifted.genus() == sum.genus());
  const Word want = canonicalize(surgery(base.pattern, i, j)).word;
  bool found = false;
  for (int q : find_torus_blocks(lifted))
    if (canonicalize(split_torus_summand(lifted, q).pattern).word == want) found = true;
  CHECK(found);
}
