#include "gmet/corpus.hpp"

#include <stdexcept>
#include <utility>

namespace gmet {

namespace {

// Unit-interval sample: points k*step for k = 0..1/step, closed-form G.
Space unit_grid(const Rat& step, OrderKind ord) {
  if (step <= 0 || Rat(1) / step != Rat(numerator(Rat(1) / step)))
    throw std::invalid_argument("grid step must divide 1");
  Space s;
  Int n = numerator(Rat(1) / step);
  for (Int k = 0; k <= n; ++k) s.points.push_back(PointValue::num(Rat(k) * step));
  s.g.kind = GKind::MaxAbsDiff;
  s.g.n = s.size();
  s.order.kind = ord;
  s.grid = true;
  return s;
}

// Tabulates a numeric self-map over a grid, rounding images up to the grid.
SelfMap tabulate_snapped(const Space& s, const Rat& step, const std::function<Rat(const Rat&)>& f,
                         std::string expr) {
  SelfMap T;
  T.expr = std::move(expr);
  for (const PointValue& p : s.points) {
    Rat img = ceil_to_multiple(f(*p.number), step);
    PointId id = s.find_point(PointValue::num(img));
    if (id < 0) throw std::logic_error("snapped image left the grid");
    T.table.push_back(id);
  }
  return T;
}

PiecewiseFn half_then_one() {
  // t/2 on [0,2], constant 1 beyond; value at the joint is 1.
  PiecewiseFn f;
  f.breakpoints = {Rat(0), Rat(2)};
  f.values = {Rat(0), Rat(1)};
  f.pieces = {{Rat(1, 2), Rat(0)}, {Rat(0), Rat(1)}};
  return f;
}

Scenario ex2_1(const CorpusOptions& o) {
  Scenario sc;
  sc.id = "ex2.1";
  sc.title = "discontinuous unit-interval map with fixed point 0";
  sc.space = unit_grid(o.grid_step, OrderKind::NumericLeq);
  sc.space.regular = true;
  sc.space.continuous_map = false;
  sc.space.finalize();
  sc.map = tabulate_snapped(sc.space, o.grid_step,
                            [](const Rat& x) { return x < 1 ? Rat(0) : Rat(1, 4); },
                            "x -> 0 on [0,1), 1 -> 1/4");
  sc.psi = PiecewiseFn::identity();
  sc.phi = PiecewiseFn::linear(Rat(1, 2));
  sc.kind = ContractionKind::Thm21_M;
  sc.expected.fixed_points = {"0"};
  sc.expected.contraction_verdict = "pass_on_grid";
  sc.expected.uniqueness = "pass";
  sc.expected.named_values["sharpest_ratio"] = "1/4";
  sc.expected.source = "computed";
  return sc;
}

Scenario ex2_2(const CorpusOptions& o) {
  Scenario sc;
  sc.id = "ex2.2";
  sc.title = "unit-interval map with no order seed";
  sc.space = unit_grid(o.grid_step, OrderKind::ExplicitPairs);
  // x <= y iff x = y or xy(x - y) > 0: strictly positive chains run downward.
  sc.space.order.kind = OrderKind::ExplicitPairs;
  for (PointId i = 0; i < sc.space.size(); ++i)
    for (PointId j = 0; j < sc.space.size(); ++j) {
      const Rat& x = *sc.space.points[i].number;
      const Rat& y = *sc.space.points[j].number;
      if (x * y * (x - y) > 0) sc.space.order.pairs.emplace_back(i, j);
    }
  sc.space.regular = false;
  sc.space.continuous_map = false;
  sc.space.finalize();
  sc.map = tabulate_snapped(sc.space, o.grid_step,
                            [](const Rat& x) { return x > 0 ? Rat(0) : Rat(1, 4); },
                            "x -> 0 on (0,1], 0 -> 1/4");
  sc.psi = PiecewiseFn::identity();
  sc.phi = PiecewiseFn::linear(Rat(1, 4));
  sc.kind = ContractionKind::Thm21_M;
  sc.expected.contraction_verdict = "pass_on_grid";
  sc.expected.computed_failed_conditions = {"seed_exists"};
  return sc;
}

Scenario ex2_3() {
  Scenario sc;
  sc.id = "ex2.3";
  sc.title = "non-monotone swap on {2,3,4} under divisibility";
  for (int v : {2, 3, 4}) sc.space.points.push_back(PointValue::num(Rat(v)));
  sc.space.g.kind = GKind::MaxAbsDiff;
  sc.space.g.n = 3;
  sc.space.order.kind = OrderKind::Divides;
  sc.space.finalize();
  sc.map.table = {2, 2, 1};  // 2 -> 4, 3 -> 4, 4 -> 3
  sc.map.expr = "2 -> 4, 3 -> 4, 4 -> 3";
  sc.psi = PiecewiseFn::identity();
  sc.phi = PiecewiseFn::linear(Rat(1, 4));
  sc.kind = ContractionKind::Thm21_M;
  sc.expected.contraction_verdict = "pass";
  sc.expected.computed_failed_conditions = {"monotone_nondecreasing"};
  return sc;
}

Scenario ex2_4() {
  Scenario sc;
  sc.id = "ex2.4";
  sc.title = "fixed-point-free swap on {2,3}";
  sc.space.points = {PointValue::num(Rat(2)), PointValue::num(Rat(3))};
  sc.space.g.kind = GKind::MaxAbsDiff;
  sc.space.g.n = 2;
  sc.space.order.kind = OrderKind::Divides;
  sc.space.finalize();
  sc.map.table = {1, 0};
  sc.map.expr = "2 -> 3, 3 -> 2";
  sc.psi = PiecewiseFn::identity();
  sc.phi = PiecewiseFn::linear(Rat(1, 2));
  sc.kind = ContractionKind::Thm21_M;
  sc.expected.contraction_verdict = "pass";
  sc.expected.computed_failed_conditions = {"seed_exists"};
  return sc;
}

Scenario ex2_5(const CorpusOptions& o) {
  Scenario sc;
  sc.id = "ex2.5";
  sc.title = "doubling on powers of two (truncated carrier)";
  Rat p = 2;
  for (int i = 0; i < o.power_count; ++i, p *= 2) sc.space.points.push_back(PointValue::num(p));
  sc.space.g.kind = GKind::MaxAbsDiff;
  sc.space.g.n = sc.space.size();
  sc.space.order.kind = OrderKind::Divides;
  sc.space.finalize();
  for (int i = 0; i < o.power_count; ++i)
    sc.map.table.push_back(i + 1 < o.power_count ? i + 1 : SelfMap::kOut);
  sc.map.expr = "x -> 2x";
  sc.psi = PiecewiseFn::identity();
  sc.phi = half_then_one();
  sc.kind = ContractionKind::M1Variant;
  sc.expected.contraction_verdict = "pass";
  sc.expected.named_values["min_margin"] = "2";
  return sc;
}

Scenario ex2_6(const CorpusOptions& o) {
  Scenario sc;
  sc.id = "ex2.6";
  sc.title = "increasing two-piece map on the reversed unit interval";
  sc.space = unit_grid(o.grid_step, OrderKind::NumericGeq);
  sc.space.continuous_map = true;
  sc.space.regular = true;
  sc.space.finalize();
  sc.map = tabulate_snapped(
      sc.space, o.grid_step,
      [](const Rat& x) {
        return x <= Rat(7, 32) ? 2 * x + Rat(1, 16) : Rat(16, 25) * x + Rat(9, 25);
      },
      "x -> 2x+1/16 on [0,7/32], 16x/25+9/25 on (7/32,1]");
  sc.psi = PiecewiseFn::identity();
  sc.phi = PiecewiseFn::linear(Rat(1, 32));
  sc.kind = ContractionKind::Thm21_M;
  sc.expected.fixed_points = {"1"};
  sc.expected.contraction_verdict = "pass_on_grid";
  sc.expected.uniqueness = "pass";
  // Pairwise distances at the witness pair x = 5/64, y = 0.
  sc.expected.named_values["d_Tx_Ty"] = "5/32";
  sc.expected.named_values["d_x_y"] = "5/64";
  sc.expected.named_values["d_Tx_x"] = "9/64";
  sc.expected.named_values["d_Ty_y"] = "1/16";
  sc.expected.named_values["d_Tx_y"] = "7/32";
  sc.expected.named_values["d_Ty_x"] = "1/64";
  sc.expected.named_values["metric_M"] = "9/64";
  return sc;
}

Scenario ex2_7() {
  Scenario sc;
  sc.id = "ex2.7";
  sc.title = "three-point table metric, pair-form contraction";
  for (int v : {1, 2, 3}) sc.space.points.push_back(PointValue::num(Rat(v)));
  sc.space.g = GMetric::make_table(3);
  sc.space.g.set_sym(0, 0, 1, 3);
  sc.space.g.set_sym(1, 1, 2, 3);
  sc.space.g.set_sym(0, 1, 1, 5);
  sc.space.g.set_sym(0, 1, 2, 5);
  sc.space.g.set_sym(0, 0, 2, 4);
  sc.space.g.set_sym(1, 2, 2, 4);
  sc.space.g.set_sym(0, 2, 2, 2);
  sc.space.order.kind = OrderKind::NumericLeq;
  sc.space.finalize();
  sc.map.table = {1, 2, 2};
  sc.map.expr = "1 -> 2, 2 -> 3, 3 -> 3";
  sc.psi = PiecewiseFn::identity();
  sc.phi = PiecewiseFn::linear(Rat(1, 20));
  sc.kind = ContractionKind::Thm26_N;
  sc.expected.fixed_points = {"3"};
  sc.expected.contraction_verdict = "pass";
  sc.expected.uniqueness = "pass";
  return sc;
}

Scenario ex3_1() {
  Scenario sc;
  sc.id = "ex3.1";
  sc.title = "two incomparable fixed points";
  sc.space.points = {PointValue::num(Rat(2)), PointValue::num(Rat(3))};
  sc.space.g.kind = GKind::MaxAbsDiff;
  sc.space.g.n = 2;
  sc.space.order.kind = OrderKind::Divides;
  sc.space.finalize();
  sc.map.table = {0, 1};
  sc.map.expr = "identity";
  sc.psi = PiecewiseFn::identity();
  sc.phi = PiecewiseFn::linear(Rat(1, 2));
  sc.kind = ContractionKind::Thm21_M;
  sc.expected.fixed_points = {"2", "3"};
  sc.expected.contraction_verdict = "pass";
  sc.expected.uniqueness = "fail";
  return sc;
}

Scenario ex3_2(const CorpusOptions& o) {
  Scenario sc;
  sc.id = "ex3.2";
  sc.title = "two fixed points whose upper bounds all escape";
  sc.space.points = {PointValue::num(Rat(2)), PointValue::num(Rat(3))};
  // Six times the primes with alternating sign, starting at +12.
  std::vector<int> primes;
  for (int c = 2; static_cast<int>(primes.size()) < o.prime_count; ++c) {
    bool prime = c > 1;
    for (int d = 2; d * d <= c; ++d)
      if (c % d == 0) prime = false;
    if (prime) primes.push_back(c);
  }
  for (int n = 0; n < o.prime_count; ++n) {
    int sign = n % 2 == 0 ? 1 : -1;
    sc.space.points.push_back(PointValue::num(Rat(sign * primes[static_cast<size_t>(n)] * 6)));
  }
  sc.space.g.kind = GKind::MaxAbsDiff;
  sc.space.g.n = sc.space.size();
  sc.space.order.kind = OrderKind::Divides;
  sc.space.finalize();
  sc.map.table = {0, 1};
  for (int n = 0; n < o.prime_count; ++n)
    sc.map.table.push_back(n + 1 < o.prime_count ? n + 3 : SelfMap::kOut);
  sc.map.expr = "2 -> 2, 3 -> 3, 6 s p_n -> -6 s p_{n+1}";
  sc.psi = PiecewiseFn::identity();
  sc.phi = half_then_one();
  sc.kind = ContractionKind::Thm21_M;
  sc.expected.fixed_points = {"2", "3"};
  sc.expected.contraction_verdict = "pass";
  sc.expected.uniqueness = "fail";
  return sc;
}

}  // namespace

std::vector<std::string> corpus_ids() {
  return {"ex2.1", "ex2.2", "ex2.3", "ex2.4", "ex2.5", "ex2.6", "ex2.7", "ex3.1", "ex3.2"};
}

Scenario load_example(const std::string& id, const CorpusOptions& opts) {
  if (id == "ex2.1") return ex2_1(opts);
  if (id == "ex2.2") return ex2_2(opts);
  if (id == "ex2.3") return ex2_3();
  if (id == "ex2.4") return ex2_4();
  if (id == "ex2.5") return ex2_5(opts);
  if (id == "ex2.6") return ex2_6(opts);
  if (id == "ex2.7") return ex2_7();
  if (id == "ex3.1") return ex3_1();
  if (id == "ex3.2") return ex3_2(opts);
  throw std::invalid_argument("unknown example id: " + id);
}

}  // namespace gmet
