#include "gmet/json_io.hpp"

#include <stdexcept>

namespace gmet {

namespace {

Json rats_to_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const Rat& r : v) a.push_back(rat_str(r));
  return a;
}

std::vector<Rat> rats_from_json(const Json& a) {
  std::vector<Rat> v;
  for (const auto& e : a) v.push_back(parse_rat(e.get<std::string>()));
  return v;
}

std::string order_name(OrderKind k) {
  switch (k) {
    case OrderKind::ExplicitPairs: return "pairs";
    case OrderKind::NumericLeq: return "leq";
    case OrderKind::NumericGeq: return "geq";
    case OrderKind::Divides: return "divides";
  }
  return "?";
}

OrderKind order_from_name(const std::string& n) {
  if (n == "pairs") return OrderKind::ExplicitPairs;
  if (n == "leq") return OrderKind::NumericLeq;
  if (n == "geq") return OrderKind::NumericGeq;
  if (n == "divides") return OrderKind::Divides;
  throw std::runtime_error("unknown order kind '" + n + "'");
}

std::string gkind_name(GKind k) {
  switch (k) {
    case GKind::Table: return "table";
    case GKind::MaxOfMetric: return "max_of_metric";
    case GKind::SumOfMetric: return "sum_of_metric";
    case GKind::MaxAbsDiff: return "max_abs_diff";
  }
  return "?";
}

GKind gkind_from_name(const std::string& n) {
  if (n == "table") return GKind::Table;
  if (n == "max_of_metric") return GKind::MaxOfMetric;
  if (n == "sum_of_metric") return GKind::SumOfMetric;
  if (n == "max_abs_diff") return GKind::MaxAbsDiff;
  throw std::runtime_error("unknown gmetric kind '" + n + "'");
}

Json point_strings(const Space& s, const std::vector<PointId>& ids) {
  Json a = Json::array();
  for (PointId p : ids) a.push_back(s.points[static_cast<size_t>(p)].str());
  return a;
}

Json witness_to_json(const Space& s, const Witness& w) {
  Json j;
  j["tuple"] = point_strings(s, w.tuple);
  j["values"] = rats_to_json(w.values);
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

}  // namespace

Json function_to_json(const PiecewiseFn& f) {
  Json j;
  j["breakpoints"] = rats_to_json(f.breakpoints);
  j["values_at"] = rats_to_json(f.values);
  Json pieces = Json::array();
  for (const AffinePiece& p : f.pieces)
    pieces.push_back({{"slope", rat_str(p.slope)}, {"intercept", rat_str(p.intercept)}});
  j["pieces"] = pieces;
  return j;
}

PiecewiseFn function_from_json(const Json& j) {
  PiecewiseFn f;
  f.breakpoints = rats_from_json(j.at("breakpoints"));
  f.values = rats_from_json(j.at("values_at"));
  for (const auto& p : j.at("pieces"))
    f.pieces.push_back({parse_rat(p.at("slope").get<std::string>()),
                        parse_rat(p.at("intercept").get<std::string>())});
  if (f.breakpoints.size() != f.values.size() || f.breakpoints.size() != f.pieces.size())
    throw std::runtime_error("function literal: mismatched array lengths");
  return f;
}

Json scenario_to_json(const Scenario& sc) {
  Json j;
  j["id"] = sc.id;
  j["title"] = sc.title;
  Json pts = Json::array();
  for (const PointValue& p : sc.space.points) pts.push_back(p.str());
  j["points"] = pts;
  Json order;
  order["kind"] = order_name(sc.space.order.kind);
  if (sc.space.order.kind == OrderKind::ExplicitPairs) {
    Json pairs = Json::array();
    for (auto [a, b] : sc.space.order.pairs) pairs.push_back({a, b});
    order["pairs"] = pairs;
  }
  j["order"] = order;
  Json gm;
  gm["kind"] = gkind_name(sc.space.g.kind);
  if (sc.space.g.kind == GKind::Table) gm["table"] = rats_to_json(sc.space.g.table);
  if (sc.space.g.kind == GKind::MaxOfMetric || sc.space.g.kind == GKind::SumOfMetric)
    gm["metric"] = rats_to_json(sc.space.g.metric);
  j["gmetric"] = gm;
  j["regular"] = sc.space.regular ? Json(*sc.space.regular) : Json(nullptr);
  j["continuous_map"] =
      sc.space.continuous_map ? Json(*sc.space.continuous_map) : Json(nullptr);
  j["grid"] = sc.space.grid;
  j["map"] = {{"table", sc.map.table}, {"expr", sc.map.expr}};
  if (sc.psi) j["psi"] = function_to_json(*sc.psi);
  if (sc.phi) j["phi"] = function_to_json(*sc.phi);
  if (sc.kind) j["kind"] = kind_name(*sc.kind);
  Json exp;
  exp["fixed_points"] = sc.expected.fixed_points;
  exp["contraction_verdict"] = sc.expected.contraction_verdict;
  exp["computed_failed_conditions"] = sc.expected.computed_failed_conditions;
  exp["uniqueness"] = sc.expected.uniqueness;
  exp["named_values"] = sc.expected.named_values;
  exp["source"] = sc.expected.source;
  j["expected"] = exp;
  return j;
}

Scenario scenario_from_json(const Json& j) {
  Scenario sc;
  sc.id = j.value("id", "");
  sc.title = j.value("title", "");
  for (const auto& e : j.at("points")) {
    std::string s = e.get<std::string>();
    try {
      sc.space.points.push_back(PointValue::num(parse_rat(s)));
    } catch (const std::invalid_argument&) {
      sc.space.points.push_back(PointValue::named(s));
    }
  }
  const Json& order = j.at("order");
  sc.space.order.kind = order_from_name(order.at("kind").get<std::string>());
  if (sc.space.order.kind == OrderKind::ExplicitPairs)
    for (const auto& p : order.at("pairs"))
      sc.space.order.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  const Json& gm = j.at("gmetric");
  sc.space.g.kind = gkind_from_name(gm.at("kind").get<std::string>());
  sc.space.g.n = sc.space.size();
  if (sc.space.g.kind == GKind::Table) sc.space.g.table = rats_from_json(gm.at("table"));
  if (sc.space.g.kind == GKind::MaxOfMetric || sc.space.g.kind == GKind::SumOfMetric)
    sc.space.g.metric = rats_from_json(gm.at("metric"));
  if (j.contains("regular") && !j.at("regular").is_null())
    sc.space.regular = j.at("regular").get<bool>();
  if (j.contains("continuous_map") && !j.at("continuous_map").is_null())
    sc.space.continuous_map = j.at("continuous_map").get<bool>();
  sc.space.grid = j.value("grid", false);
  sc.space.finalize();
  if (j.contains("map")) {
    sc.map.table = j.at("map").at("table").get<std::vector<PointId>>();
    sc.map.expr = j.at("map").value("expr", "");
    if (sc.map.table.size() != sc.space.points.size())
      throw std::runtime_error("map table size does not match point count");
    for (PointId t : sc.map.table)
      if (t != SelfMap::kOut && (t < 0 || t >= sc.space.size()))
        throw std::runtime_error("map image out of range");
  }
  if (j.contains("psi")) sc.psi = function_from_json(j.at("psi"));
  if (j.contains("phi")) sc.phi = function_from_json(j.at("phi"));
  if (j.contains("kind")) {
    auto k = kind_from_name(j.at("kind").get<std::string>());
    if (!k) throw std::runtime_error("unknown contraction kind '" +
                                     j.at("kind").get<std::string>() + "'");
    sc.kind = *k;
  }
  if (j.contains("expected")) {
    const Json& exp = j.at("expected");
    sc.expected.fixed_points = exp.value("fixed_points", std::vector<std::string>{});
    sc.expected.contraction_verdict = exp.value("contraction_verdict", "");
    sc.expected.computed_failed_conditions =
        exp.value("computed_failed_conditions", std::vector<std::string>{});
    sc.expected.uniqueness = exp.value("uniqueness", "");
    sc.expected.named_values =
        exp.value("named_values", std::map<std::string, std::string>{});
    sc.expected.source = exp.value("source", "stated");
  }
  return sc;
}

Scenario parse_scenario(const std::string& text, const std::string& origin) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte carries the input position of the failure.
    throw std::runtime_error(origin + ": parse error at byte " + std::to_string(e.byte) + ": " +
                             e.what());
  }
  try {
    return scenario_from_json(j);
  } catch (const std::exception& e) {
    throw std::runtime_error(origin + ": " + e.what());
  }
}

Json axiom_report_to_json(const Space& s, const AxiomReport& r, const std::string& subject) {
  Json j;
  j["subject"] = subject;
  j["verdict"] = r.pass() ? "pass" : "fail";
  Json checks = Json::array();
  for (const AxiomCheck& c : r.checks) {
    Json cj;
    cj["axiom"] = c.axiom;
    cj["pass"] = c.pass;
    Json ws = Json::array();
    for (const Witness& w : c.witnesses) ws.push_back(witness_to_json(s, w));
    cj["witnesses"] = ws;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

Json class_report_to_json(const ClassReport& r) {
  auto item = [](const ClassReport::Item& it) {
    Json j;
    j["pass"] = it.pass;
    Json ws = Json::array();
    for (const FnWitness& w : it.witnesses) ws.push_back({{"t", rat_str(w.t)}, {"note", w.note}});
    j["witnesses"] = ws;
    return j;
  };
  Json j;
  j["zero_iff_zero"] = item(r.zero_iff_zero);
  j["nondecreasing"] = item(r.nondecreasing);
  j["continuous"] = item(r.continuous);
  j["lower_semicontinuous"] = item(r.lower_semicontinuous);
  j["psi_ok"] = r.psi_ok();
  j["phi_ok"] = r.phi_ok();
  return j;
}

Json contraction_report_to_json(const Space& s, const ContractionReport& r) {
  Json j;
  j["kind"] = kind_name(r.kind);
  j["verdict"] = r.verdict;
  j["checked"] = r.checked;
  Json vs = Json::array();
  for (const Violation& v : r.violations) {
    Json vj;
    vj["tuple"] = point_strings(s, v.tuple);
    vj["lhs"] = rat_str(v.lhs);
    vj["F"] = rat_str(v.functional);
    vj["rhs"] = rat_str(v.rhs);
    vs.push_back(vj);
  }
  j["violations"] = vs;
  j["truncated"] = r.truncated;
  return j;
}

Json orbit_to_json(const Space& s, const OrbitTrace& t) {
  Json j;
  j["seed"] = s.points[static_cast<size_t>(t.seed)].str();
  j["points"] = point_strings(s, t.points);
  j["step_g"] = rats_to_json(t.step_g);
  j["verdict"] = orbit_verdict_name(t.verdict);
  j["steps"] = t.steps;
  if (t.verdict == OrbitVerdict::FixedPointReached)
    j["fixed_point"] = s.points[static_cast<size_t>(t.fixed_point)].str();
  if (t.verdict == OrbitVerdict::Cycle) {
    j["cycle_period"] = t.cycle_period;
    j["cycle_entry"] = t.cycle_entry;
  }
  return j;
}

Json hypothesis_report_to_json(const Space& s, const HypothesisReport& r) {
  Json j;
  Json conds = Json::array();
  for (const Condition& c : r.conditions) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["provenance"] = c.provenance;
    Json ws = Json::array();
    for (const Witness& w : c.witnesses) ws.push_back(witness_to_json(s, w));
    cj["witnesses"] = ws;
    if (!c.note.empty()) cj["note"] = c.note;
    conds.push_back(cj);
  }
  j["conditions"] = conds;
  j["contraction"] = contraction_report_to_json(s, r.contraction);
  j["truncated"] = r.truncated;
  j["all_pass"] = r.all_pass();
  j["computed_failures"] = r.computed_failures();
  return j;
}

Json uniqueness_report_to_json(const Space& s, const UniquenessReport& r) {
  Json j;
  j["fixed_points"] = point_strings(s, r.fixed_points);
  Json pairs = Json::array();
  for (const UniquenessPair& p : r.pairs) {
    Json pj;
    pj["a"] = s.points[static_cast<size_t>(p.a)].str();
    pj["b"] = s.points[static_cast<size_t>(p.b)].str();
    Json cs = Json::array();
    for (const auto& c : p.candidates)
      cs.push_back({{"z", s.points[static_cast<size_t>(c.z)].str()},
                    {"verdict", orbit_verdict_name(c.verdict)}});
    pj["candidates"] = cs;
    pj["pass"] = p.pass;
    pairs.push_back(pj);
  }
  j["pairs"] = pairs;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["truncated_evidence"] = r.truncated_evidence;
  return j;
}

}  // namespace gmet
