#include "doctest.h"
#include "ofc/jsonio.hpp"

using namespace ofc;

TEST_CASE("info JSON for the torus") {
  const json j = info_json(GluingPattern::parse("1 2 -1 -2"));
  CHECK(j["genus"] == 1);
  CHECK(j["vertices"] == 1);
  CHECK(j["edges"] == 2);
  CHECK(j["s"] == 2);
  CHECK(j["trisections"] == 2);
  CHECK(j["text"] == "1 2 -1 -2");
  CHECK(j["word"].get<Word>() == Word{1, 2, -1, -2});
  REQUIRE(j["census"].size() == 1);
  CHECK(j["census"][0]["type"] == 2);
  CHECK(j["census"][0]["trisections"] == 2);
  REQUIRE(j["curves"].size() == 2);
  for (const auto& c : j["curves"]) {
    CHECK(c["one_simple"] == true);
    CHECK(c["self_intersections"] == 0);
  }
}

TEST_CASE("class JSON carries the orbit data") {
  const json j = class_json(canonicalize(GluingPattern::parse("1 2 -1 -2")));
  CHECK(j["genus"] == 1);
  CHECK(j["orbit"] == 1);
  CHECK(j["aut"] == 4);
  CHECK(j["text"] == "1 2 -1 -2");
}

TEST_CASE("trace JSON lists steps with ops, words and markers") {
  const GluingPattern p = GluingPattern::parse("1 2 3 -1 4 -2 5 6 -4 -5 -3 -6");
  const auto [q, trace] = simplify_cascade(p);
  const json j = trace_json(trace);
  REQUIRE(j["steps"].size() == trace.steps.size());
  CHECK(j["steps"][0]["op"] == "simplify");
  CHECK(j["steps"][0]["before"].get<Word>() == p.word());
  CHECK(j["markers"]["non_simplifiable"] == static_cast<int>(trace.steps.size()));
  CHECK(j["surgeries"] == trace.surgery_count());
}

TEST_CASE("extraction JSON names the reduced word and the marked edge") {
  const Extraction ex =
      extract_torus_summand(GluingPattern::parse("1 2 -1 3 -2 -3 4 5 -4 6 -5 -6"));
  const json j = extraction_json(ex);
  CHECK(j["reduced_text"] == "1 2 -1 -2");
  CHECK(j["marked"] == ex.marked);
  CHECK(j["trace"]["steps"].size() == ex.trace.steps.size());
}

TEST_CASE("JSON dumps are byte-stable") {
  const GluingPattern p = GluingPattern::parse("1 2 -1 3 -2 -3 4 5 -4 6 -5 -6");
  CHECK(info_json(p).dump(2) == info_json(p).dump(2));
  const json j = pattern_json(p);
  CHECK(json::parse(j.dump())["word"].get<Word>() == p.word());
}
