#include "doctest.h"
#include "ofc/pattern.hpp"

using namespace ofc;

TEST_CASE("parse and serialize round trip") {
  const GluingPattern p = GluingPattern::parse("1 2 -1 -2");
  CHECK(p.serialize() == "1 2 -1 -2");
  CHECK(p.size() == 4);
  CHECK(p.edge_count() == 2);
  CHECK(p.vertex_count() == 1);
  CHECK(p.genus() == 1);
}

TEST_CASE("normalization relabels by first appearance, first occurrence positive") {
  CHECK(GluingPattern::parse("3 -7 -3 7").serialize() == "1 2 -1 -2");
  CHECK(GluingPattern::parse("-5 2 5 -2").serialize() == "1 2 -1 -2");
  const GluingPattern p = GluingPattern::parse("1 2 -1 -2");
  CHECK(p.rotated(1) == p);
  CHECK(p.rotated(3) == p);
}

TEST_CASE("parse rejects malformed words") {
  CHECK_THROWS_AS(GluingPattern::parse(""), Error);
  CHECK_THROWS_AS(GluingPattern::parse("   "), Error);
  try {
    GluingPattern::parse("1 2 -1");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unpaired_label);
  }
  try {
    GluingPattern::parse("1 1 2 -2 -1 -1");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unpaired_label);
  }
  // paired and even, but a vertex walk closes after two steps
  try {
    GluingPattern::parse("1 -1 2 -2");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_four_valent);
  }
}

TEST_CASE("involution and rotations on the torus word") {
  const GluingPattern p = GluingPattern::parse("1 2 -1 -2");
  CHECK(p.alpha(0) == 2);
  CHECK(p.alpha(1) == 3);
  CHECK(p.alpha(p.alpha(0)) == 0);
  CHECK(p.gamma(3) == 0);
  for (int q = 0; q < p.size(); ++q) {
    CHECK(p.alpha(q) != q);
    CHECK(p.mu(p.alpha(q)) == p.gamma(q));  // following alpha then mu retraces the face
  }
}

TEST_CASE("the torus has a single vertex cycle (1, -2, -1, 2)") {
  const GluingPattern p = GluingPattern::parse("1 2 -1 -2");
  const auto cycles = p.vertex_cycles();
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0] == std::array<int, 4>{0, 3, 2, 1});
  CHECK(p.label(cycles[0][0]) == 1);
  CHECK(p.label(cycles[0][1]) == -2);
  CHECK(p.label(cycles[0][2]) == -1);
  CHECK(p.label(cycles[0][3]) == 2);
}

TEST_CASE("order_index measures cyclic distance from the root") {
  const GluingPattern p = GluingPattern::parse("1 2 -1 -2");
  CHECK(p.order_index(0, 0) == 0);
  CHECK(p.order_index(0, 3) == 3);
  CHECK(p.order_index(2, 1) == 3);
}

TEST_CASE("word_text formats a word like serialize") {
  const GluingPattern p = GluingPattern::parse("1 2 -1 3 -2 -3 4 5 -4 6 -5 -6");
  CHECK(word_text(p.word()) == p.serialize());
  CHECK(p.genus() == 2);
  CHECK(p.vertex_count() == 3);
  CHECK(p.vertex_cycles().size() == 3);
}
