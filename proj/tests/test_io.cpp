#include <doctest.h>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "riesz/error.hpp"
#include "riesz/fixtures.hpp"
#include "riesz/io.hpp"
#include "riesz/pogroup.hpp"
#include "riesz/states.hpp"

using namespace riesz;
using nlohmann::json;

TEST_CASE("algebra files round-trip through JSON") {
  auto e = product({build_chain(2), build_chain(3)});
  auto j = algebra_to_json(e);
  auto res = validate(raw_from_json(j));
  REQUIRE(res.ok());
  CHECK(res.algebra->size() == e.size());
  CHECK(algebra_to_json(*res.algebra) == j);
}

TEST_CASE("zero sums are omitted on save and completed on load") {
  auto j = algebra_to_json(build_chain(2));
  for (const auto& triple : j.at("sums")) {
    CHECK(triple[0].get<std::string>() != "0");
    CHECK(triple[1].get<std::string>() != "0");
  }
  auto res = validate(raw_from_json(j));
  REQUIRE(res.ok());
  CHECK(res.algebra->plus(0, 1) == 1);
}

TEST_CASE("effect triples imply their commuted form") {
  json j;
  j["kind"] = "effect";
  j["elements"] = {"0", "x", "y", "1"};
  j["zero"] = "0";
  j["unit"] = "1";
  j["sums"] = {{"x", "y", "1"}};
  auto res = validate(raw_from_json(j));
  REQUIRE(res.ok());
  CHECK(res.algebra->plus(res.algebra->index("y"), res.algebra->index("x")) ==
        res.algebra->unit());
}

TEST_CASE("conflicting triples are a load error") {
  json j;
  j["kind"] = "effect";
  j["elements"] = {"0", "x", "y", "1"};
  j["zero"] = "0";
  j["unit"] = "1";
  j["sums"] = {{"x", "y", "1"}, {"y", "x", "y"}};
  CHECK_THROWS_AS(raw_from_json(j), Error);
  json dup;
  dup["kind"] = "effect";
  dup["elements"] = {"0", "x", "x", "1"};
  dup["zero"] = "0";
  dup["unit"] = "1";
  dup["sums"] = json::array();
  CHECK_THROWS_AS(raw_from_json(dup), Error);
}

TEST_CASE("po-group files round-trip through JSON") {
  for (const char* name : {"example38", "example39", "quadrant"}) {
    auto g = fixture_group(name);
    auto j = pogroup_to_json(g);
    auto g2 = pogroup_from_json(j);
    CHECK(pogroup_to_json(g2) == j);
  }
}

TEST_CASE("reports serialize with property, verdict, witness and stats") {
  Witness w;
  w.tag = "rdp";
  w.tuple = {"a", "b"};
  w.note = "no refinement";
  auto r = report_fails("rdp", w, {{"pairs", 7}});
  auto j = report_to_json(r);
  CHECK(j.at("property") == "rdp");
  CHECK(j.at("verdict") == "fails");
  CHECK(j.at("witness").at("tuple")[0] == "a");
  CHECK(j.at("stats").at("pairs") == 7);
  auto h = report_to_json(report_holds("mv"));
  CHECK(h.at("verdict") == "holds");
  CHECK(!h.contains("witness"));
}

TEST_CASE("states serialize as exact fraction maps") {
  auto c3 = build_chain(3);
  auto ext = extremal_states(c3);
  REQUIRE(ext.size() == 1);
  auto j = state_to_json(c3, ext[0]);
  CHECK(j.at("a") == "1/3");
  CHECK(j.at("2a") == "2/3");
  auto back = state_from_json(c3, j);
  CHECK(back.values == ext[0].values);
  json missing = {{"a", "1/3"}};
  CHECK_THROWS_AS(state_from_json(c3, missing), Error);
}

TEST_CASE("fixture emission is byte-stable") {
  auto a = dump_stable(emit_fixture("example39"));
  auto b = dump_stable(emit_fixture("example39"));
  CHECK(a == b);
  auto j = emit_fixture("example39");
  CHECK(j.at("cone").at("excluded") == json::array({1}));
  CHECK(j.at("unit") == json::array({5}));
  CHECK(emit_fixture("chain-3").at("elements").size() == 4);
  CHECK(emit_fixture("boolean-2").at("elements").size() == 4);
  CHECK(emit_fixture("hsum-2-2").at("elements").size() == 4);
  CHECK(emit_fixture("chainprod-2-3").at("elements").size() == 12);
  CHECK_THROWS_AS(emit_fixture("nonsense"), Error);
}
