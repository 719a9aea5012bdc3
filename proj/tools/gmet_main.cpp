// Command-line front end: load a scenario, run a verification, emit a report.
#include "gmet/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace gmet;

struct Options {
  std::string scenario_path;
  std::string example_id;
  std::string kind;
  std::string seed;
  int budget = 10000;
  std::string grid_step = "1/64";
  int depth = 16;
  std::string alpha = "1";
  std::string out;
  std::string format = "json";
};

Scenario resolve_scenario(const Options& opt) {
  if (opt.scenario_path.empty() && opt.example_id.empty())
    throw std::runtime_error("need --scenario PATH or --example ID");
  if (!opt.scenario_path.empty()) {
    std::ifstream in(opt.scenario_path);
    if (!in) throw std::runtime_error(opt.scenario_path + ": cannot open");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), opt.scenario_path);
  }
  CorpusOptions co;
  co.grid_step = parse_rat(opt.grid_step);
  return load_example(opt.example_id, co);
}

void emit(const Json& report, const Options& opt) {
  std::string text = report.dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out, std::ios::binary);
    out << text;
  }
}

// Flat "key: value" rendering for --format text.
void render_text(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      render_text(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array()) {
    if (j.empty()) os << prefix << ": []\n";
    for (size_t i = 0; i < j.size(); ++i)
      render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit_any(const Json& report, const Options& opt) {
  if (opt.format == "json") {
    emit(report, opt);
    return;
  }
  std::ostringstream os;
  render_text(report, "", os);
  if (opt.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(opt.out, std::ios::binary);
    out << os.str();
  }
}

ContractionKind require_kind(const Options& opt) {
  auto k = kind_from_name(opt.kind);
  if (!k) throw std::runtime_error("unknown or missing --kind '" + opt.kind + "'");
  return *k;
}

PiecewiseFn require_fn(const std::optional<PiecewiseFn>& f, const char* name) {
  if (!f) throw std::runtime_error(std::string("scenario does not define ") + name);
  return *f;
}

int verb_verify_axioms(const Options& opt) {
  Scenario sc = resolve_scenario(opt);
  AxiomReport poset = verify_poset(sc.space);
  AxiomReport gm = verify_gmetric(sc.space);
  Json j;
  j["scenario"] = sc.id;
  j["poset"] = axiom_report_to_json(sc.space, poset, "order");
  j["gmetric"] = axiom_report_to_json(sc.space, gm, "gmetric");
  j["verdict"] = poset.pass() && gm.pass() ? "pass" : "fail";
  emit_any(j, opt);
  return poset.pass() && gm.pass() ? 0 : 1;
}

int verb_check_contraction(const Options& opt) {
  Scenario sc = resolve_scenario(opt);
  ContractionKind k = require_kind(opt);
  ContractionReport r = check_contraction(sc.space, sc.map, require_fn(sc.psi, "psi"),
                                          require_fn(sc.phi, "phi"), k);
  Json j = contraction_report_to_json(sc.space, r);
  j["scenario"] = sc.id;
  emit_any(j, opt);
  return r.pass() ? 0 : 1;
}

int verb_check_hypotheses(const Options& opt) {
  Scenario sc = resolve_scenario(opt);
  ContractionKind k = opt.kind.empty() ? sc.kind.value_or(ContractionKind::Thm21_M)
                                       : require_kind(opt);
  HypothesisReport r = check_hypotheses(sc.space, sc.map, require_fn(sc.psi, "psi").to_fn(),
                                        require_fn(sc.phi, "phi").to_fn(), k);
  Json j = hypothesis_report_to_json(sc.space, r);
  j["scenario"] = sc.id;
  emit_any(j, opt);
  return r.all_pass() ? 0 : 1;
}

int verb_solve(const Options& opt) {
  Scenario sc = resolve_scenario(opt);
  PointId x0 = sc.space.find_point(PointValue::num(parse_rat(opt.seed)));
  if (x0 < 0) throw std::runtime_error("seed '" + opt.seed + "' is not a carrier point");
  OrbitTrace t = picard_orbit(sc.space, sc.map, x0, opt.budget);
  Json j = orbit_to_json(sc.space, t);
  j["scenario"] = sc.id;
  emit_any(j, opt);
  return t.verdict == OrbitVerdict::FixedPointReached ? 0 : 1;
}

int verb_fixed_points(const Options& opt) {
  Scenario sc = resolve_scenario(opt);
  std::vector<PointId> fps = enumerate_fixed_points(sc.space, sc.map);
  Json j;
  j["scenario"] = sc.id;
  Json a = Json::array();
  for (PointId p : fps) a.push_back(sc.space.points[static_cast<size_t>(p)].str());
  j["fixed_points"] = a;
  emit_any(j, opt);
  return 0;
}

int verb_check_uniqueness(const Options& opt) {
  Scenario sc = resolve_scenario(opt);
  UniquenessReport r = check_uniqueness_hypothesis(sc.space, sc.map, opt.budget);
  Json j = uniqueness_report_to_json(sc.space, r);
  j["scenario"] = sc.id;
  emit_any(j, opt);
  return r.pass ? 0 : 1;
}

int verb_construct(const std::string& what, const Options& opt) {
  Scenario sc = resolve_scenario(opt);
  PiecewiseFn psi = require_fn(sc.psi, "psi");
  PiecewiseFn phi = require_fn(sc.phi, "phi");
  Json j;
  j["scenario"] = sc.id;
  j["construct"] = what;
  if (what == "phi1") {
    Phi1Result r = construct_phi1(psi, phi, parse_rat(opt.alpha), opt.depth);
    j["alpha"] = rat_str(r.alpha);
    j["depth"] = r.depth;
    j["truncated"] = r.truncated;
    j["phi1"] = function_to_json(r.fn);
    j["class"] = class_report_to_json(validate_phi(r.fn));
  } else if (what == "phi2") {
    PiecewiseFn r = construct_phi2(psi, phi);
    j["phi2"] = function_to_json(r);
    j["class"] = class_report_to_json(validate_phi(r));
  } else if (what == "tau") {
    // Integral transform of the scenario's phi as integrand, sampled at the
    // breakpoints of psi and phi (the transform itself is quadratic).
    IntegralTransform tau = integral_transform(phi);
    Json samples = Json::array();
    std::vector<Rat> at = psi.breakpoints;
    at.insert(at.end(), phi.breakpoints.begin(), phi.breakpoints.end());
    at.push_back(1);
    std::sort(at.begin(), at.end());
    at.erase(std::unique(at.begin(), at.end()), at.end());
    for (const Rat& t : at)
      samples.push_back({{"t", rat_str(t)}, {"tau", rat_str(tau(t))}});
    j["samples"] = samples;
  } else {
    throw std::runtime_error("construct target must be phi1, phi2 or tau");
  }
  emit_any(j, opt);
  return 0;
}

int verb_run_corpus(const Options& opt) {
  CorpusOptions co;
  co.grid_step = parse_rat(opt.grid_step);
  Json all = Json::array();
  bool ok = true;
  for (const std::string& id : corpus_ids()) {
    Scenario sc = load_example(id, co);
    Json j;
    j["scenario"] = sc.id;
    j["title"] = sc.title;

    std::vector<PointId> fps = enumerate_fixed_points(sc.space, sc.map);
    Json fpj = Json::array();
    std::vector<std::string> fp_strs;
    for (PointId p : fps) {
      fp_strs.push_back(sc.space.points[static_cast<size_t>(p)].str());
      fpj.push_back(fp_strs.back());
    }
    j["fixed_points"] = fpj;
    bool match = fp_strs == sc.expected.fixed_points;

    HypothesisReport hr =
        check_hypotheses(sc.space, sc.map, sc.psi->to_fn(), sc.phi->to_fn(), *sc.kind);
    j["hypotheses"] = hypothesis_report_to_json(sc.space, hr);
    match = match && hr.computed_failures() == sc.expected.computed_failed_conditions;
    match = match && hr.contraction.verdict == sc.expected.contraction_verdict;

    if (!sc.expected.uniqueness.empty()) {
      UniquenessReport ur = check_uniqueness_hypothesis(sc.space, sc.map, opt.budget);
      j["uniqueness"] = uniqueness_report_to_json(sc.space, ur);
      match = match && (ur.pass ? "pass" : "fail") == sc.expected.uniqueness;
    }

    if (auto it = sc.expected.named_values.find("metric_M");
        it != sc.expected.named_values.end()) {
      auto w = find_nonequivalence_witness(sc.space, sc.map);
      if (w) {
        Json wj;
        wj["x"] = sc.space.points[static_cast<size_t>(w->x)].str();
        wj["y"] = sc.space.points[static_cast<size_t>(w->y)].str();
        wj["metric_M"] = rat_str(w->metric_M);
        wj["lhs"] = rat_str(w->lhs);
        j["nonequivalence_witness"] = wj;
        match = match && rat_str(w->metric_M) == it->second;
      } else {
        match = false;
      }
    }

    j["expected_match"] = match;
    ok = ok && match;
    all.push_back(j);
  }
  Json top;
  top["corpus"] = all;
  top["verdict"] = ok ? "pass" : "fail";
  emit_any(top, opt);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for ordered generalized-metric scenarios"};
  app.require_subcommand(1);
  Options opt;
  std::string construct_what;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* sopt = sub->add_option("--scenario", opt.scenario_path, "scenario JSON path");
    auto* eopt = sub->add_option("--example", opt.example_id, "bundled example id");
    if (needs_input) {
      sopt->excludes(eopt);
    }
    sub->add_option("--budget", opt.budget, "orbit step budget");
    sub->add_option("--grid-step", opt.grid_step, "grid spacing for sampled scenarios");
    sub->add_option("--depth", opt.depth, "construction depth");
    sub->add_option("--out", opt.out, "write the report here instead of stdout");
    sub->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* verify = app.add_subcommand("verify-axioms", "check order and distance axioms");
  add_common(verify, true);
  auto* contraction = app.add_subcommand("check-contraction", "check one inequality kind");
  add_common(contraction, true);
  contraction->add_option("--kind", opt.kind, "inequality kind")->required();
  auto* hypotheses = app.add_subcommand("check-hypotheses", "check the four theorem hypotheses");
  add_common(hypotheses, true);
  hypotheses->add_option("--kind", opt.kind, "inequality kind");
  auto* solve = app.add_subcommand("solve", "iterate the map from a seed");
  add_common(solve, true);
  solve->add_option("--seed", opt.seed, "starting point")->required();
  auto* fixed = app.add_subcommand("fixed-points", "enumerate fixed points");
  add_common(fixed, true);
  auto* uniq = app.add_subcommand("check-uniqueness", "check the common-upper-bound hypothesis");
  add_common(uniq, true);
  auto* corpus = app.add_subcommand("run-corpus", "re-verify every bundled scenario");
  add_common(corpus, false);
  auto* construct = app.add_subcommand("construct", "build phi1 / phi2 / tau from psi and phi");
  construct->add_option("what", construct_what, "phi1|phi2|tau")->required();
  construct->add_option("--alpha", opt.alpha, "scale for the phi1 interval families");
  add_common(construct, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return verb_verify_axioms(opt);
    if (contraction->parsed()) return verb_check_contraction(opt);
    if (hypotheses->parsed()) return verb_check_hypotheses(opt);
    if (solve->parsed()) return verb_solve(opt);
    if (fixed->parsed()) return verb_fixed_points(opt);
    if (uniq->parsed()) return verb_check_uniqueness(opt);
    if (corpus->parsed()) return verb_run_corpus(opt);
    if (construct->parsed()) return verb_construct(construct_what, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
