#pragma once

#include "gmet/rational.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gmet {

using PointId = int;

/// A carrier point: a rational number or an opaque label.
struct PointValue {
  std::optional<Rat> number;
  std::string label;

  static PointValue num(Rat r) { return PointValue{std::move(r), {}}; }
  static PointValue named(std::string l) { return PointValue{std::nullopt, std::move(l)}; }

  bool is_numeric() const { return number.has_value(); }
  std::string str() const { return number ? rat_str(*number) : label; }
  bool operator==(const PointValue& o) const {
    return number == o.number && label == o.label;
  }
};

enum class OrderKind { ExplicitPairs, NumericLeq, NumericGeq, Divides };

struct PartialOrder {
  OrderKind kind = OrderKind::NumericLeq;
  std::vector<std::pair<PointId, PointId>> pairs;  // ExplicitPairs only
};

enum class GKind { Table, MaxOfMetric, SumOfMetric, MaxAbsDiff };

/// A three-argument distance. Table stores a dense n^3 array so that
/// asymmetric (G4-violating) inputs are representable and detectable.
/// Derived kinds keep the underlying two-argument metric.
struct GMetric {
  GKind kind = GKind::MaxAbsDiff;
  int n = 0;
  std::vector<Rat> table;   // n^3, Table kind
  std::vector<Rat> metric;  // n^2, MaxOfMetric / SumOfMetric

  Rat& at(int i, int j, int k) { return table[(static_cast<size_t>(i) * n + j) * n + k]; }
  const Rat& at(int i, int j, int k) const {
    return table[(static_cast<size_t>(i) * n + j) * n + k];
  }
  Rat& d(int i, int j) { return metric[static_cast<size_t>(i) * n + j]; }
  const Rat& d(int i, int j) const { return metric[static_cast<size_t>(i) * n + j]; }

  static GMetric make_table(int n);
  /// Fills all six permutations of (i,j,k).
  void set_sym(int i, int j, int k, const Rat& v);
};

struct Space {
  std::vector<PointValue> points;
  GMetric g;
  PartialOrder order;
  std::optional<bool> regular;         // declared; meaningful on grid spaces
  std::optional<bool> continuous_map;  // declared; meaningful on grid spaces
  bool grid = false;  // finite sample of a continuum carrier

  int size() const { return static_cast<int>(points.size()); }
  bool leq(PointId i, PointId j) const;

  /// Validates indices and builds the comparability matrix. Must be called
  /// after the point set, order and metric are assembled.
  void finalize();

  /// Index of the point with the given value, or -1.
  PointId find_point(const PointValue& v) const;

 private:
  std::vector<char> leq_;
};

/// Total or explicitly partial self-map; kOut marks images outside the
/// (truncated) carrier.
struct SelfMap {
  static constexpr PointId kOut = -1;
  std::vector<PointId> table;
  std::string expr;  // provenance only

  PointId apply(PointId x) const { return table[static_cast<size_t>(x)]; }
  bool partial() const;
};

struct Witness {
  std::vector<PointId> tuple;
  std::vector<Rat> values;
  std::string note;
};

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::vector<Witness> witnesses;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool pass() const;
  const AxiomCheck* find(const std::string& axiom) const;
};

/// Exact G-distance; dispatches on the metric kind.
Rat g_eval(const Space& s, PointId x, PointId y, PointId z);

/// Pairwise distance used by the metric-form functionals: the stored metric
/// for derived kinds, |x-y| on numeric carriers, G(x,y,y) otherwise.
Rat metric_d(const Space& s, PointId x, PointId y);

/// Reflexivity, antisymmetry and transitivity of the order over the carrier.
AxiomReport verify_poset(const Space& s);

/// Exhaustive check of the five G-metric axioms (rectangle inequality is
/// O(n^4)). Witness collection capped per axiom.
AxiomReport verify_gmetric(const Space& s);

/// Builds Max/Sum G-metric from a two-argument metric, validating the metric
/// axioms first. Throws std::invalid_argument naming the violated axiom.
GMetric derive_gmetric(int n, const std::vector<Rat>& metric, GKind mode);

/// All (x,y,z) with x<=y and y<=z in the order, lexicographic by PointId.
/// Degenerate triples included.
std::vector<std::tuple<PointId, PointId, PointId>> enumerate_comparable_triples(const Space& s);

/// All (x,y) with x<=y in the order, lexicographic, reflexive pairs included.
std::vector<std::pair<PointId, PointId>> comparable_pairs(const Space& s);

}  // namespace gmet
