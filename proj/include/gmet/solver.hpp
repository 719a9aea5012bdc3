#pragma once

#include "gmet/contraction.hpp"
#include "gmet/piecewise.hpp"
#include "gmet/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gmet {

enum class OrbitVerdict { FixedPointReached, Cycle, BudgetExceeded, LeftDomain };

std::string orbit_verdict_name(OrbitVerdict v);

struct OrbitTrace {
  PointId seed = 0;
  std::vector<PointId> points;  // x0, x1, ...
  std::vector<Rat> step_g;      // G(x_n, x_{n+1}, x_{n+1}) per applied step
  OrbitVerdict verdict = OrbitVerdict::BudgetExceeded;
  PointId fixed_point = -1;  // FixedPointReached
  int steps = 0;             // applications performed before the verdict
  int cycle_period = 0;      // Cycle
  int cycle_entry = 0;       // Cycle: index of first revisited point
};

/// Iterates x_{n+1} = T(x_n) until an exact fixed point, a revisited point,
/// a domain exit, or the budget.
OrbitTrace picard_orbit(const Space& s, const SelfMap& T, PointId x0, int budget);

/// {p : T(p) = p}, ascending by PointId.
std::vector<PointId> enumerate_fixed_points(const Space& s, const SelfMap& T);

struct Condition {
  std::string name;
  bool pass = false;
  std::string provenance;  // "computed" | "declared" | "grid"
  std::vector<Witness> witnesses;
  std::string note;
};

struct HypothesisReport {
  std::vector<Condition> conditions;
  ContractionReport contraction;
  bool truncated = false;
  bool all_pass() const;
  /// Failed conditions whose verdict was computed (not declared).
  std::vector<std::string> computed_failures() const;
};

/// Checks the four hypotheses of the fixed-point theorems:
///   1. continuity-or-regularity (computed on finite spaces, declared on grids)
///   2. T nondecreasing (exhaustive over comparable pairs)
///   3. a seed x0 <= T(x0) exists (lexicographically first witness)
///   4. the contraction inequality of the given kind
HypothesisReport check_hypotheses(const Space& s, const SelfMap& T, const ScalarFn& psi,
                                  const ScalarFn& phi, ContractionKind kind);

struct UniquenessPair {
  PointId a = 0, b = 0;  // distinct fixed points
  struct Candidate {
    PointId z;
    OrbitVerdict verdict;
  };
  std::vector<Candidate> candidates;  // common upper bounds, ascending
  bool pass = false;                  // some candidate orbit converges
};

struct UniquenessReport {
  std::vector<PointId> fixed_points;
  std::vector<UniquenessPair> pairs;
  bool pass = true;
  bool truncated_evidence = false;  // a candidate orbit left a truncated carrier
};

/// For every unordered pair of distinct fixed points, scans for a common
/// upper bound whose Picard orbit reaches a fixed point.
UniquenessReport check_uniqueness_hypothesis(const Space& s, const SelfMap& T, int budget);

}  // namespace gmet
