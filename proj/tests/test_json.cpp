#include "gmet/json_io.hpp"

#include <doctest.h>

using namespace gmet;

TEST_CASE("scenario documents round-trip bit-exactly") {
  for (const std::string& id : corpus_ids()) {
    Scenario sc = load_example(id);
    Json once = scenario_to_json(sc);
    Json twice = scenario_to_json(scenario_from_json(once));
    CHECK(once.dump() == twice.dump());
  }
}

TEST_CASE("function literals parse from the documented shape") {
  Json j = Json::parse(R"({"breakpoints": ["0","2"], "values_at": ["0","1"],
                           "pieces": [{"slope":"1/2","intercept":"0"},
                                      {"slope":"0","intercept":"1"}]})");
  PiecewiseFn f = function_from_json(j);
  CHECK(f.eval(1) == Rat(1, 2));
  CHECK(f.eval(3) == 1);
  CHECK(function_to_json(f).dump() == function_to_json(function_from_json(j)).dump());
}

TEST_CASE("rationals travel as exact lowest-term strings") {
  Scenario sc = load_example("ex2.6");
  Json j = scenario_to_json(sc);
  bool found = false;
  for (const auto& p : j["points"]) {
    std::string s = p.get<std::string>();
    CHECK(s.find('.') == std::string::npos);  // never floats
    if (s == "5/64") found = true;
  }
  CHECK(found);
}

TEST_CASE("malformed documents raise position-bearing errors") {
  CHECK_THROWS_WITH_AS(parse_scenario("{\"points\": [", "doc.json"),
                       doctest::Contains("doc.json"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_scenario("{\"points\": [", "doc.json"),
                       doctest::Contains("byte"), std::runtime_error);
  // structurally valid JSON, semantically broken scenario
  CHECK_THROWS_WITH_AS(
      parse_scenario(R"({"points": ["1"], "order": {"kind": "nope"},
                         "gmetric": {"kind": "max_abs_diff"}})",
                     "doc.json"),
      doctest::Contains("order kind"), std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_scenario(R"({"points": ["1","2"], "order": {"kind": "leq"},
                         "gmetric": {"kind": "max_abs_diff"},
                         "map": {"table": [0]}})",
                     "doc.json"),
      doctest::Contains("map table"), std::runtime_error);
}

TEST_CASE("the contraction report envelope carries the documented fields") {
  Scenario sc = load_example("ex2.7");
  ContractionReport r =
      check_contraction(sc.space, sc.map, *sc.psi, *sc.phi, ContractionKind::Thm27_GxTxy);
  Json j = contraction_report_to_json(sc.space, r);
  CHECK(j["kind"] == "thm2.7");
  CHECK(j["verdict"] == "fail");
  CHECK(j["checked"].get<long>() > 0);
  CHECK(j["truncated"] == false);
  REQUIRE(!j["violations"].empty());
  const Json& v = j["violations"][0];
  CHECK(v.contains("tuple"));
  CHECK(v.contains("lhs"));
  CHECK(v.contains("F"));
  CHECK(v.contains("rhs"));
  CHECK(v["lhs"] == "3");
  CHECK(v["F"] == "3");
}

TEST_CASE("report serialization is deterministic") {
  Scenario sc = load_example("ex3.2");
  UniquenessReport r = check_uniqueness_hypothesis(sc.space, sc.map, 100);
  CHECK(uniqueness_report_to_json(sc.space, r).dump() ==
        uniqueness_report_to_json(sc.space, r).dump());
  HypothesisReport hr =
      check_hypotheses(sc.space, sc.map, sc.psi->to_fn(), sc.phi->to_fn(), *sc.kind);
  Json hj = hypothesis_report_to_json(sc.space, hr);
  CHECK(hj["truncated"] == true);
  CHECK(hj.dump() == hypothesis_report_to_json(sc.space, hr).dump());
}

TEST_CASE("orbit reports name their verdicts") {
  Scenario sc = load_example("ex2.4");
  OrbitTrace t = picard_orbit(sc.space, sc.map, 0, 100);
  Json j = orbit_to_json(sc.space, t);
  CHECK(j["verdict"] == "cycle");
  CHECK(j["cycle_period"] == 2);
  Scenario grid = load_example("ex2.1");
  OrbitTrace t2 = picard_orbit(grid.space, grid.map, grid.space.size() - 1, 100);
  Json j2 = orbit_to_json(grid.space, t2);
  CHECK(j2["verdict"] == "fixed_point_reached");
  CHECK(j2["fixed_point"] == "0");
  CHECK(j2["points"][1] == "1/4");
}

TEST_CASE("unknown example ids are rejected") {
  CHECK_THROWS_AS(load_example("ex9.9"), std::invalid_argument);
}
