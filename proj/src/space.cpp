#include "gmet/space.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmet {

namespace {
constexpr int kWitnessCap = 16;

const Rat& require_number(const PointValue& p) {
  if (!p.number) throw std::invalid_argument("numeric order/metric on a labeled point");
  return *p.number;
}
}  // namespace

GMetric GMetric::make_table(int n) {
  GMetric g;
  g.kind = GKind::Table;
  g.n = n;
  g.table.assign(static_cast<size_t>(n) * n * n, Rat(0));
  return g;
}

void GMetric::set_sym(int i, int j, int k, const Rat& v) {
  at(i, j, k) = v;
  at(i, k, j) = v;
  at(j, i, k) = v;
  at(j, k, i) = v;
  at(k, i, j) = v;
  at(k, j, i) = v;
}

bool SelfMap::partial() const {
  return std::find(table.begin(), table.end(), kOut) != table.end();
}

void Space::finalize() {
  const int n = size();
  if (n < 1) throw std::invalid_argument("space must contain at least one point");
  if (g.kind == GKind::Table && static_cast<int>(g.table.size()) != n * n * n)
    throw std::invalid_argument("G-metric table size does not match point count");
  if ((g.kind == GKind::MaxOfMetric || g.kind == GKind::SumOfMetric) &&
      static_cast<int>(g.metric.size()) != n * n)
    throw std::invalid_argument("metric table size does not match point count");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("duplicate point value at indices " + std::to_string(i) +
                                    "," + std::to_string(j));

  leq_.assign(static_cast<size_t>(n) * n, 0);
  auto rel = [&](int i, int j) -> bool {
    switch (order.kind) {
      case OrderKind::NumericLeq:
        return require_number(points[i]) <= require_number(points[j]);
      case OrderKind::NumericGeq:
        return require_number(points[i]) >= require_number(points[j]);
      case OrderKind::Divides:
        return rat_divides(require_number(points[i]), require_number(points[j]));
      case OrderKind::ExplicitPairs:
        return false;  // filled below
    }
    return false;
  };
  if (order.kind == OrderKind::ExplicitPairs) {
    for (auto& [a, b] : order.pairs) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("order pair index out of range: (" + std::to_string(a) +
                                    "," + std::to_string(b) + ")");
      leq_[static_cast<size_t>(a) * n + b] = 1;
    }
    for (int i = 0; i < n; ++i) leq_[static_cast<size_t>(i) * n + i] = 1;  // reflexive closure
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) leq_[static_cast<size_t>(i) * n + j] = rel(i, j) ? 1 : 0;
  }
}

bool Space::leq(PointId i, PointId j) const {
  return leq_[static_cast<size_t>(i) * size() + j] != 0;
}

PointId Space::find_point(const PointValue& v) const {
  for (int i = 0; i < size(); ++i)
    if (points[i] == v) return i;
  return -1;
}

bool AxiomReport::pass() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const AxiomCheck* AxiomReport::find(const std::string& axiom) const {
  for (auto& c : checks)
    if (c.axiom == axiom) return &c;
  return nullptr;
}

Rat g_eval(const Space& s, PointId x, PointId y, PointId z) {
  const int n = s.size();
  if (x < 0 || y < 0 || z < 0 || x >= n || y >= n || z >= n)
    throw std::out_of_range("point id out of range");
  switch (s.g.kind) {
    case GKind::Table:
      return s.g.at(x, y, z);
    case GKind::MaxOfMetric:
      return std::max({s.g.d(x, y), s.g.d(y, z), s.g.d(z, x)});
    case GKind::SumOfMetric:
      return s.g.d(x, y) + s.g.d(y, z) + s.g.d(z, x);
    case GKind::MaxAbsDiff: {
      const Rat& a = require_number(s.points[x]);
      const Rat& b = require_number(s.points[y]);
      const Rat& c = require_number(s.points[z]);
      return std::max({rat_abs(a - b), rat_abs(b - c), rat_abs(c - a)});
    }
  }
  throw std::logic_error("unreachable");
}

Rat metric_d(const Space& s, PointId x, PointId y) {
  switch (s.g.kind) {
    case GKind::MaxOfMetric:
    case GKind::SumOfMetric:
      return s.g.d(x, y);
    case GKind::MaxAbsDiff:
      return rat_abs(require_number(s.points[x]) - require_number(s.points[y]));
    case GKind::Table:
      return g_eval(s, x, y, y);
  }
  throw std::logic_error("unreachable");
}

AxiomReport verify_poset(const Space& s) {
  const int n = s.size();
  AxiomReport r;
  AxiomCheck refl{"reflexivity"};
  for (int i = 0; i < n; ++i)
    if (!s.leq(i, i)) {
      refl.pass = false;
      if (static_cast<int>(refl.witnesses.size()) < kWitnessCap)
        refl.witnesses.push_back({{i}, {}, "x not<= x"});
    }
  AxiomCheck anti{"antisymmetry"};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (s.leq(i, j) && s.leq(j, i)) {
        anti.pass = false;
        if (static_cast<int>(anti.witnesses.size()) < kWitnessCap)
          anti.witnesses.push_back({{i, j}, {}, "x<=y and y<=x with x!=y"});
      }
  AxiomCheck trans{"transitivity"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!s.leq(i, j)) continue;
      for (int k = 0; k < n; ++k)
        if (s.leq(j, k) && !s.leq(i, k)) {
          trans.pass = false;
          if (static_cast<int>(trans.witnesses.size()) < kWitnessCap)
            trans.witnesses.push_back({{i, j, k}, {}, "x<=y<=z but not x<=z"});
        }
    }
  r.checks = {refl, anti, trans};
  return r;
}

AxiomReport verify_gmetric(const Space& s) {
  const int n = s.size();
  AxiomReport r;

  AxiomCheck g1{"G1"};
  for (int i = 0; i < n; ++i) {
    Rat v = g_eval(s, i, i, i);
    if (v != 0) {
      g1.pass = false;
      if (static_cast<int>(g1.witnesses.size()) < kWitnessCap)
        g1.witnesses.push_back({{i, i, i}, {v}, "G(x,x,x) != 0"});
    }
  }

  AxiomCheck g2{"G2"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Rat v = g_eval(s, i, i, j);
      if (v <= 0) {
        g2.pass = false;
        if (static_cast<int>(g2.witnesses.size()) < kWitnessCap)
          g2.witnesses.push_back({{i, i, j}, {v}, "G(x,x,y) <= 0 with x != y"});
      }
    }

  AxiomCheck g3{"G3"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        Rat lhs = g_eval(s, i, i, j);
        Rat rhs = g_eval(s, i, j, k);
        if (lhs > rhs) {
          g3.pass = false;
          if (static_cast<int>(g3.witnesses.size()) < kWitnessCap)
            g3.witnesses.push_back({{i, j, k}, {lhs, rhs}, "G(x,x,y) > G(x,y,z)"});
        }
      }

  AxiomCheck g4{"G4"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rat v = g_eval(s, i, j, k);
        const std::tuple<int, int, int> perms[] = {{i, k, j}, {j, i, k}, {j, k, i},
                                                   {k, i, j}, {k, j, i}};
        for (auto& [a, b, c] : perms) {
          Rat w = g_eval(s, a, b, c);
          if (w != v) {
            g4.pass = false;
            if (static_cast<int>(g4.witnesses.size()) < kWitnessCap)
              g4.witnesses.push_back({{i, j, k, a, b, c}, {v, w}, "permutation changes G"});
            break;
          }
        }
      }

  AxiomCheck g5{"G5"};
  for (int i = 0; i < n && static_cast<int>(g5.witnesses.size()) < kWitnessCap; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rat lhs = g_eval(s, i, j, k);
        for (int a = 0; a < n; ++a) {
          Rat rhs = g_eval(s, i, a, a) + g_eval(s, a, j, k);
          if (lhs > rhs) {
            g5.pass = false;
            if (static_cast<int>(g5.witnesses.size()) < kWitnessCap)
              g5.witnesses.push_back({{i, j, k, a}, {lhs, rhs}, "rectangle inequality fails"});
          }
        }
      }

  r.checks = {g1, g2, g3, g4, g5};
  return r;
}

GMetric derive_gmetric(int n, const std::vector<Rat>& metric, GKind mode) {
  if (mode != GKind::MaxOfMetric && mode != GKind::SumOfMetric)
    throw std::invalid_argument("derive_gmetric mode must be Max or Sum");
  if (static_cast<int>(metric.size()) != n * n)
    throw std::invalid_argument("metric table must be n x n");
  auto d = [&](int i, int j) -> const Rat& { return metric[static_cast<size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    if (d(i, i) != 0)
      throw std::invalid_argument("not a metric (identity): d(" + std::to_string(i) + "," +
                                  std::to_string(i) + ") != 0");
    for (int j = 0; j < n; ++j) {
      if (d(i, j) != d(j, i))
        throw std::invalid_argument("not a metric (symmetry): d(" + std::to_string(i) + "," +
                                    std::to_string(j) + ") != d(" + std::to_string(j) + "," +
                                    std::to_string(i) + ")");
      if (i != j && d(i, j) <= 0)
        throw std::invalid_argument("not a metric (positivity): d(" + std::to_string(i) + "," +
                                    std::to_string(j) + ") <= 0");
      for (int k = 0; k < n; ++k)
        if (d(i, k) > d(i, j) + d(j, k))
          throw std::invalid_argument("not a metric (triangle inequality) at (" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")");
    }
  }
  GMetric g;
  g.kind = mode;
  g.n = n;
  g.metric = metric;
  return g;
}

std::vector<std::tuple<PointId, PointId, PointId>> enumerate_comparable_triples(const Space& s) {
  std::vector<std::tuple<PointId, PointId, PointId>> out;
  const int n = s.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!s.leq(i, j)) continue;
      for (int k = 0; k < n; ++k)
        if (s.leq(j, k)) out.emplace_back(i, j, k);
    }
  return out;
}

std::vector<std::pair<PointId, PointId>> comparable_pairs(const Space& s) {
  std::vector<std::pair<PointId, PointId>> out;
  const int n = s.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (s.leq(i, j)) out.emplace_back(i, j);
  return out;
}

}  // namespace gmet
