#include "gmet/solver.hpp"

#include <stdexcept>
#include <unordered_map>

namespace gmet {

std::string orbit_verdict_name(OrbitVerdict v) {
  switch (v) {
    case OrbitVerdict::FixedPointReached: return "fixed_point_reached";
    case OrbitVerdict::Cycle: return "cycle";
    case OrbitVerdict::BudgetExceeded: return "budget_exceeded";
    case OrbitVerdict::LeftDomain: return "left_domain";
  }
  throw std::logic_error("unreachable");
}

OrbitTrace picard_orbit(const Space& s, const SelfMap& T, PointId x0, int budget) {
  if (budget <= 0) throw std::invalid_argument("budget must be positive");
  if (x0 < 0 || x0 >= s.size()) throw std::out_of_range("seed out of range");

  OrbitTrace tr;
  tr.seed = x0;
  tr.points.push_back(x0);
  std::unordered_map<PointId, int> first_seen{{x0, 0}};

  PointId cur = x0;
  for (int n = 0; n < budget; ++n) {
    PointId nxt = T.apply(cur);
    if (nxt == SelfMap::kOut) {
      tr.verdict = OrbitVerdict::LeftDomain;
      tr.steps = n;
      return tr;
    }
    if (nxt == cur) {
      tr.verdict = OrbitVerdict::FixedPointReached;
      tr.fixed_point = cur;
      tr.steps = n;
      return tr;
    }
    tr.step_g.push_back(g_eval(s, cur, nxt, nxt));
    tr.points.push_back(nxt);
    auto [it, fresh] = first_seen.emplace(nxt, n + 1);
    if (!fresh) {
      tr.verdict = OrbitVerdict::Cycle;
      tr.cycle_entry = it->second;
      tr.cycle_period = n + 1 - it->second;
      tr.steps = n + 1;
      return tr;
    }
    cur = nxt;
  }
  tr.verdict = OrbitVerdict::BudgetExceeded;
  tr.steps = budget;
  return tr;
}

std::vector<PointId> enumerate_fixed_points(const Space& s, const SelfMap& T) {
  std::vector<PointId> out;
  for (PointId p = 0; p < s.size(); ++p)
    if (T.apply(p) == p) out.push_back(p);
  return out;
}

bool HypothesisReport::all_pass() const {
  for (auto& c : conditions)
    if (!c.pass) return false;
  return true;
}

std::vector<std::string> HypothesisReport::computed_failures() const {
  std::vector<std::string> out;
  for (auto& c : conditions)
    if (!c.pass && c.provenance != "declared") out.push_back(c.name);
  return out;
}

HypothesisReport check_hypotheses(const Space& s, const SelfMap& T, const ScalarFn& psi,
                                  const ScalarFn& phi, ContractionKind kind) {
  HypothesisReport r;

  Condition c1{"continuity_or_regularity"};
  if (!s.grid) {
    // finite discrete carrier: convergence is eventual constancy, so the
    // space is regular non-decreasing and every self-map is continuous
    c1.pass = true;
    c1.provenance = "computed";
  } else {
    bool cont = s.continuous_map.value_or(false);
    bool reg = s.regular.value_or(false);
    c1.pass = cont || reg;
    c1.provenance = "declared";
    if (!s.continuous_map && !s.regular) c1.note = "no declared flags on a grid space";
  }

  Condition c2{"monotone_nondecreasing"};
  c2.pass = true;
  c2.provenance = "computed";
  for (auto& [x, y] : comparable_pairs(s)) {
    PointId tx = T.apply(x), ty = T.apply(y);
    if (tx == SelfMap::kOut || ty == SelfMap::kOut) {
      r.truncated = true;
      continue;
    }
    if (!s.leq(tx, ty)) {
      c2.pass = false;
      if (c2.witnesses.size() < 8) c2.witnesses.push_back({{x, y}, {}, "x<=y but not Tx<=Ty"});
    }
  }

  Condition c3{"seed_exists"};
  c3.pass = false;
  c3.provenance = "computed";
  for (PointId x = 0; x < s.size(); ++x) {
    PointId tx = T.apply(x);
    if (tx == SelfMap::kOut) {
      r.truncated = true;
      continue;
    }
    if (s.leq(x, tx)) {
      c3.pass = true;
      c3.witnesses.push_back({{x}, {}, "x0 <= T(x0)"});
      break;
    }
  }
  if (!c3.pass) c3.note = "no point satisfies x <= T(x)";

  r.contraction = check_contraction(s, T, psi, phi, kind);
  Condition c4{"contraction"};
  c4.pass = r.contraction.pass();
  c4.provenance = s.grid ? "grid" : "computed";
  for (auto& v : r.contraction.violations)
    if (c4.witnesses.size() < 8)
      c4.witnesses.push_back({v.tuple, {v.lhs, v.functional, v.rhs}, "inequality fails"});
  if (r.contraction.truncated) r.truncated = true;

  r.conditions = {c1, c2, c3, c4};
  return r;
}

UniquenessReport check_uniqueness_hypothesis(const Space& s, const SelfMap& T, int budget) {
  UniquenessReport r;
  r.fixed_points = enumerate_fixed_points(s, T);
  for (size_t i = 0; i < r.fixed_points.size(); ++i)
    for (size_t j = i + 1; j < r.fixed_points.size(); ++j) {
      UniquenessPair pr;
      pr.a = r.fixed_points[i];
      pr.b = r.fixed_points[j];
      for (PointId z = 0; z < s.size(); ++z) {
        if (!s.leq(pr.a, z) || !s.leq(pr.b, z)) continue;
        OrbitTrace tr = picard_orbit(s, T, z, budget);
        pr.candidates.push_back({z, tr.verdict});
        if (tr.verdict == OrbitVerdict::FixedPointReached) pr.pass = true;
        if (tr.verdict == OrbitVerdict::LeftDomain || tr.verdict == OrbitVerdict::BudgetExceeded)
          r.truncated_evidence = true;
      }
      if (!pr.pass) r.pass = false;
      r.pairs.push_back(std::move(pr));
    }
  return r;
}

}  // namespace gmet
