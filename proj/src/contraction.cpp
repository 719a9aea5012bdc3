#include "gmet/contraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmet {

namespace {
constexpr int kViolationCap = 32;

bool in_space(PointId p) { return p != SelfMap::kOut; }
}  // namespace

bool kind_uses_triples(ContractionKind k) {
  switch (k) {
    case ContractionKind::Thm21_M:
    case ContractionKind::Thm25_G:
    case ContractionKind::M1Variant:
      return true;
    default:
      return false;
  }
}

std::string kind_name(ContractionKind k) {
  switch (k) {
    case ContractionKind::Thm21_M: return "thm2.1";
    case ContractionKind::Thm25_G: return "thm2.5";
    case ContractionKind::Thm26_N: return "thm2.6";
    case ContractionKind::Thm27_GxTxy: return "thm2.7";
    case ContractionKind::M1Variant: return "m1";
    case ContractionKind::Metric_PsiPhi: return "metric-psi-phi";
    case ContractionKind::Metric_GenM: return "metric-genM";
    case ContractionKind::KA_15: return "ka1.5";
  }
  throw std::logic_error("unreachable");
}

std::optional<ContractionKind> kind_from_name(const std::string& name) {
  for (ContractionKind k :
       {ContractionKind::Thm21_M, ContractionKind::Thm25_G, ContractionKind::Thm26_N,
        ContractionKind::Thm27_GxTxy, ContractionKind::M1Variant, ContractionKind::Metric_PsiPhi,
        ContractionKind::Metric_GenM, ContractionKind::KA_15})
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

std::optional<Rat> compute_M(const Space& s, const SelfMap& T, PointId x, PointId y, PointId z) {
  PointId tx = T.apply(x), ty = T.apply(y), tz = T.apply(z);
  if (!in_space(tx) || !in_space(ty) || !in_space(tz)) return std::nullopt;
  return std::max({g_eval(s, x, tx, y), g_eval(s, x, tx, z), g_eval(s, x, y, z),
                   g_eval(s, y, ty, ty), g_eval(s, z, tz, tz),
                   (g_eval(s, x, ty, tz) + g_eval(s, tx, y, z)) / 2});
}

std::optional<Rat> compute_M1(const Space& s, const SelfMap& T, PointId x, PointId y, PointId z) {
  PointId tx = T.apply(x), ty = T.apply(y), tz = T.apply(z);
  if (!in_space(tx) || !in_space(ty) || !in_space(tz)) return std::nullopt;
  return std::max({g_eval(s, x, tx, y), g_eval(s, x, tx, z), g_eval(s, x, y, z),
                   g_eval(s, y, ty, ty), g_eval(s, z, tz, tz), g_eval(s, x, ty, tz),
                   g_eval(s, tx, y, z)});
}

std::optional<Rat> compute_N(const Space& s, const SelfMap& T, PointId x, PointId y) {
  PointId tx = T.apply(x), ty = T.apply(y);
  if (!in_space(tx) || !in_space(ty)) return std::nullopt;
  PointId t2x = T.apply(tx);
  if (!in_space(t2x)) return std::nullopt;
  return std::max({g_eval(s, x, tx, y), g_eval(s, tx, t2x, t2x),
                   (g_eval(s, x, tx, tx) + g_eval(s, y, ty, ty)) / 2,
                   (g_eval(s, x, t2x, ty) + g_eval(s, tx, tx, y)) / 2});
}

std::optional<Rat> compute_metric_M(const Space& s, const SelfMap& T, PointId x, PointId y) {
  PointId tx = T.apply(x), ty = T.apply(y);
  if (!in_space(tx) || !in_space(ty)) return std::nullopt;
  return std::max({metric_d(s, x, y), metric_d(s, x, tx), metric_d(s, y, ty),
                   (metric_d(s, x, ty) + metric_d(s, y, tx)) / 2});
}

namespace {

// lhs distance and functional for one tuple; nullopt = truncated tuple
struct TupleEval {
  Rat lhs;
  Rat functional;
};

std::optional<TupleEval> eval_triple(const Space& s, const SelfMap& T, ContractionKind k,
                                     PointId x, PointId y, PointId z) {
  PointId tx = T.apply(x), ty = T.apply(y), tz = T.apply(z);
  if (!in_space(tx) || !in_space(ty) || !in_space(tz)) return std::nullopt;
  Rat lhs = g_eval(s, tx, ty, tz);
  std::optional<Rat> f;
  switch (k) {
    case ContractionKind::Thm21_M: f = compute_M(s, T, x, y, z); break;
    case ContractionKind::Thm25_G: f = g_eval(s, x, y, z); break;
    case ContractionKind::M1Variant: f = compute_M1(s, T, x, y, z); break;
    default: throw std::logic_error("kind does not quantify over triples");
  }
  if (!f) return std::nullopt;
  return TupleEval{lhs, *f};
}

std::optional<TupleEval> eval_pair(const Space& s, const SelfMap& T, ContractionKind k,
                                   PointId x, PointId y) {
  PointId tx = T.apply(x), ty = T.apply(y);
  if (!in_space(tx) || !in_space(ty)) return std::nullopt;
  switch (k) {
    case ContractionKind::Thm26_N: {
      PointId t2x = T.apply(tx);
      if (!in_space(t2x)) return std::nullopt;
      auto f = compute_N(s, T, x, y);
      if (!f) return std::nullopt;
      return TupleEval{g_eval(s, tx, ty, t2x), *f};
    }
    case ContractionKind::Thm27_GxTxy:
    case ContractionKind::KA_15: {
      PointId t2x = T.apply(tx);
      if (!in_space(t2x)) return std::nullopt;
      return TupleEval{g_eval(s, tx, t2x, ty), g_eval(s, x, tx, y)};
    }
    case ContractionKind::Metric_PsiPhi:
      return TupleEval{metric_d(s, tx, ty), metric_d(s, x, y)};
    case ContractionKind::Metric_GenM: {
      auto f = compute_metric_M(s, T, x, y);
      if (!f) return std::nullopt;
      return TupleEval{metric_d(s, tx, ty), *f};
    }
    default:
      throw std::logic_error("kind does not quantify over pairs");
  }
}

}  // namespace

ContractionReport check_contraction(const Space& s, const SelfMap& T, const ScalarFn& psi,
                                    const ScalarFn& phi, ContractionKind kind) {
  ContractionReport r;
  r.kind = kind;
  const bool identity_psi = kind == ContractionKind::KA_15;  // (1.5) has no psi

  auto handle = [&](std::vector<PointId> tuple, const std::optional<TupleEval>& ev) {
    if (!ev) {
      r.truncated = true;
      return;
    }
    ++r.checked;
    Rat pl = identity_psi ? ev->lhs : psi(ev->lhs);
    Rat rhs = (identity_psi ? ev->functional : psi(ev->functional)) - phi(ev->functional);
    if (pl > rhs && static_cast<int>(r.violations.size()) < kViolationCap)
      r.violations.push_back({std::move(tuple), ev->lhs, ev->functional, rhs});
  };

  if (kind_uses_triples(kind)) {
    for (auto& [x, y, z] : enumerate_comparable_triples(s))
      handle({x, y, z}, eval_triple(s, T, kind, x, y, z));
  } else {
    for (auto& [x, y] : comparable_pairs(s)) handle({x, y}, eval_pair(s, T, kind, x, y));
  }
  r.verdict = !r.pass() ? "fail" : (s.grid ? "pass_on_grid" : "pass");
  return r;
}

ContractionReport check_contraction(const Space& s, const SelfMap& T, const PiecewiseFn& psi,
                                    const PiecewiseFn& phi, ContractionKind kind) {
  if (!validate_psi(psi).psi_ok()) throw std::invalid_argument("psi candidate rejected");
  if (!validate_phi(phi).phi_ok()) throw std::invalid_argument("phi candidate rejected");
  return check_contraction(s, T, psi.to_fn(), phi.to_fn(), kind);
}

std::optional<Rat> max_contraction_ratio(const Space& s, const SelfMap& T, ContractionKind kind) {
  std::optional<Rat> best;
  auto consider = [&](const std::optional<TupleEval>& ev) {
    if (!ev || ev->functional <= 0) return;
    Rat ratio = ev->lhs / ev->functional;
    if (!best || ratio > *best) best = ratio;
  };
  if (kind_uses_triples(kind)) {
    for (auto& [x, y, z] : enumerate_comparable_triples(s))
      consider(eval_triple(s, T, kind, x, y, z));
  } else {
    for (auto& [x, y] : comparable_pairs(s)) consider(eval_pair(s, T, kind, x, y));
  }
  return best;
}

std::optional<NonequivalenceWitness> find_nonequivalence_witness(const Space& s,
                                                                 const SelfMap& T) {
  for (auto& [x, y] : comparable_pairs(s)) {
    PointId tx = T.apply(x), ty = T.apply(y);
    if (!in_space(tx) || !in_space(ty)) continue;
    auto m = compute_metric_M(s, T, x, y);
    if (!m || *m <= 0) continue;
    Rat lhs = g_eval(s, tx, ty, ty);
    if (lhs > *m) {
      NonequivalenceWitness w;
      w.x = x;
      w.y = y;
      w.metric_M = *m;
      w.lhs = lhs;
      w.g_xyy = g_eval(s, x, y, y);
      w.defeats_plain_g = lhs > w.g_xyy;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace gmet
