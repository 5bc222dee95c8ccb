#include "doctest.h"
#include "ofc/canonical.hpp"
#include "ofc/families.hpp"

using namespace ofc;

TEST_CASE("the one-bead necklace is the torus") {
  CHECK(necklace(1) == torus_pattern());
}

TEST_CASE("necklace canonical words and orbit sizes are stable") {
  const CanonicalClass n2 = canonicalize(necklace(2));
  CHECK(word_text(n2.word) == "1 2 -1 3 -2 -3 4 5 -4 6 -5 -6");
  CHECK(n2.orbit_size == 6);
  CHECK(n2.aut_size == 2);
  const CanonicalClass n3 = canonicalize(necklace(3));
  CHECK(word_text(n3.word) == "1 2 -1 3 -2 -3 4 5 -4 6 7 -5 -7 8 9 -8 10 -9 -10 -6");
  CHECK(n3.orbit_size == 20);
  CHECK(n3.aut_size == 1);
}

TEST_CASE("necklaces carry their signature: S = g and one fat curve") {
  for (int g = 2; g <= 4; ++g) {
    const GluingPattern n = necklace(g);
    CHECK(n.genus() == g);
    CHECK(one_simple_count(n) == g);
    const CurveDecomposition dec = curve_decomposition(n);
    CHECK(static_cast<int>(dec.curves.size()) == g + 1);
    int fat = 0;
    for (const auto& c : dec.curves)
      if (!c.one_simple) {
        ++fat;
        CHECK(c.self_intersections == g - 1);
      }
    CHECK(fat == 1);
  }
}

TEST_CASE("X chains double the genus and keep S = 2g") {
  const GluingPattern x2 = chain_X(1);
  CHECK(x2.genus() == 2);
  CHECK(one_simple_count(x2) == 2);
  const GluingPattern x4 = chain_X(2);
  CHECK(x4.genus() == 4);
  CHECK(one_simple_count(x4) == 4);
}

TEST_CASE("Y chains land on the same genus with S = g+1") {
  const GluingPattern y2 = chain_Y(1);
  CHECK(y2.genus() == 2);
  CHECK(one_simple_count(y2) == 2);
  const GluingPattern y4 = chain_Y(2);
  CHECK(y4.genus() == 4);
  CHECK(one_simple_count(y4) == 3);
}

TEST_CASE("X and Y separate at genus 4: same genus, different S") {
  const GluingPattern x4 = chain_X(2), y4 = chain_Y(2);
  CHECK(x4.genus() == y4.genus());
  CHECK(one_simple_count(x4) - one_simple_count(y4) == 1);
  CHECK(canonicalize(x4).word != canonicalize(y4).word);
}
