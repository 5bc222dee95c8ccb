#include <map>

#include "doctest.h"
#include "ofc/atlas.hpp"

using namespace ofc;

TEST_CASE("rooted pattern counts from exhaustive enumeration") {
  CHECK(count_rooted(1) == 1);
  CHECK(count_rooted(2) == 45);
  CHECK(count_rooted(3) == 9450);
}

TEST_CASE("the closed-form count and its divergence from enumeration") {
  CHECK(rooted_count_formula(1) == 1);
  CHECK(rooted_count_formula(2) == 45);
  CHECK(rooted_count_formula(3) == 18900);
  CHECK(rooted_count_formula(4) == 28378350);
  // From g=3 the closed form exceeds exhaustive enumeration by exactly (g-1)!.
  CHECK(rooted_count_formula(3) == 2 * count_rooted(3));
}

TEST_CASE("genus-2 atlas: 6 classes whose orbits partition the 45 rooted patterns") {
  const auto atlas = enumerate_classes(2);
  REQUIRE(atlas.size() == 6);
  std::map<int, int> orbit_histogram;
  std::uint64_t total = 0;
  int non_simplifiable = 0;
  for (const auto& rec : atlas) {
    ++orbit_histogram[rec.cls.orbit_size];
    total += static_cast<std::uint64_t>(rec.cls.orbit_size);
    CHECK(rec.cls.genus == 2);
    CHECK(rec.cls.orbit_size * rec.cls.aut_size == 12);
    CHECK(rec.trisections_total == 4);
    CHECK(rec.census_type1 + rec.census_type2 + rec.census_type3 == 3);
    if (rec.non_simplifiable) {
      ++non_simplifiable;
      CHECK(rec.census_type1 == 1);
      CHECK(rec.census_type2 == 2);
      CHECK(rec.census_type3 == 0);
    }
  }
  CHECK(total == 45);
  CHECK(orbit_histogram == std::map<int, int>{{3, 1}, {6, 3}, {12, 2}});
  CHECK(non_simplifiable == 2);
}

TEST_CASE("genus-3 atlas: 510 classes, 27 of them non-simplifiable") {
  const auto atlas = enumerate_classes(3);
  REQUIRE(atlas.size() == 510);
  std::map<int, int> orbit_histogram;
  std::uint64_t total = 0;
  int non_simplifiable = 0;
  for (const auto& rec : atlas) {
    ++orbit_histogram[rec.cls.orbit_size];
    total += static_cast<std::uint64_t>(rec.cls.orbit_size);
    CHECK(rec.trisections_total == 6);
    if (rec.non_simplifiable) {
      ++non_simplifiable;
      CHECK(rec.census_type1 == 2);
      CHECK(rec.census_type2 == 3);
      CHECK(rec.census_type3 == 0);
    }
  }
  CHECK(total == 9450);
  CHECK(orbit_histogram == std::map<int, int>{{5, 2}, {10, 72}, {20, 436}});
  CHECK(non_simplifiable == 27);
}

TEST_CASE("enumeration rejects degenerate genus") {
  CHECK_THROWS_AS(count_rooted(0), Error);
  CHECK_THROWS_AS(enumerate_rooted(0, [](const GluingPattern&) {}), Error);
}

TEST_CASE("every genus-1 word is the torus") {
  int seen = 0;
  enumerate_rooted(1, [&](const GluingPattern& p) {
    ++seen;
    CHECK(p.serialize() == "1 2 -1 -2");
  });
  CHECK(seen == 1);
}
