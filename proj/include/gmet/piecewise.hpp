#pragma once

#include "gmet/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gmet {

using ScalarFn = std::function<Rat(const Rat&)>;

struct AffinePiece {
  Rat slope;
  Rat intercept;
  Rat at(const Rat& t) const { return slope * t + intercept; }
  bool operator==(const AffinePiece& o) const {
    return slope == o.slope && intercept == o.intercept;
  }
};

/// Piecewise-affine function on [0, inf) with explicit breakpoint values, so
/// jumps and one-sided limits are exact. pieces[i] applies on the open
/// interval (breakpoints[i], breakpoints[i+1]); the last piece extends to
/// infinity. breakpoints[0] is always 0.
struct PiecewiseFn {
  std::vector<Rat> breakpoints;
  std::vector<Rat> values;         // value at each breakpoint
  std::vector<AffinePiece> pieces; // same length as breakpoints

  size_t segment_count() const { return pieces.size(); }

  Rat eval(const Rat& t) const;  // throws on t < 0
  Rat left_limit(size_t i) const;   // limit at breakpoints[i] from below, i >= 1
  Rat right_limit(size_t i) const;  // limit at breakpoints[i] from above

  /// Merges adjacent segments whose affine pieces coincide and whose shared
  /// breakpoint value lies on the common line.
  void canonicalize();

  bool operator==(const PiecewiseFn& o) const {
    return breakpoints == o.breakpoints && values == o.values && pieces == o.pieces;
  }

  ScalarFn to_fn() const;

  static PiecewiseFn linear(const Rat& slope);
  static PiecewiseFn identity() { return linear(1); }
};

struct FnWitness {
  Rat t;
  std::string note;
};

/// Verdicts for membership in the psi / phi control-function classes.
struct ClassReport {
  struct Item {
    bool pass = true;
    std::vector<FnWitness> witnesses;
  };
  Item zero_iff_zero;
  Item nondecreasing;
  Item continuous;
  Item lower_semicontinuous;

  bool psi_ok() const {
    return zero_iff_zero.pass && nondecreasing.pass && continuous.pass;
  }
  bool phi_ok() const { return zero_iff_zero.pass && lower_semicontinuous.pass; }
};

Rat eval_fn(const PiecewiseFn& f, const Rat& t);

ClassReport validate_psi(const PiecewiseFn& f);
ClassReport validate_phi(const PiecewiseFn& f);

/// Pointwise difference a - b (values may be negative; not a control fn).
PiecewiseFn pw_diff(const PiecewiseFn& a, const PiecewiseFn& b);

/// Exact pointwise minimum.
PiecewiseFn pw_min(const PiecewiseFn& a, const PiecewiseFn& b);

/// Exact infimum / supremum over a bounded interval with explicit endpoint
/// membership. The bound is exact even when not attained.
Rat inf_on(const PiecewiseFn& f, const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed);
Rat sup_on(const PiecewiseFn& f, const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed);

struct Phi1Result {
  PiecewiseFn fn;
  bool truncated = true;  // the interval families are cut at a finite depth
  int depth = 0;
  Rat alpha;
};

/// Piecewise-constant minorant phi1 built from (psi, phi, alpha): the
/// infima/suprema over the alpha-scaled interval families, assembled so that
/// psi(u) - phi(u) <= psi(v) - phi1(v) for all u <= v within the constructed
/// depth. Requires psi >= phi pointwise.
Phi1Result construct_phi1(const PiecewiseFn& psi, const PiecewiseFn& phi, const Rat& alpha,
                          int depth);

/// Replaces phi on the regions where it exceeds psi: by psi on bounded
/// exceedance intervals, by the constant phi(r) on an unbounded one (r,inf).
/// Returns phi unchanged when phi <= psi everywhere.
PiecewiseFn construct_phi2(const PiecewiseFn& psi, const PiecewiseFn& phi);

/// tau(x) = integral of a strictly positive piecewise-affine integrand from 0
/// to x. Piecewise-quadratic, hence exposed as an evaluator.
class IntegralTransform {
 public:
  explicit IntegralTransform(PiecewiseFn integrand);
  Rat operator()(const Rat& x) const;
  const PiecewiseFn& integrand() const { return integrand_; }

 private:
  PiecewiseFn integrand_;
  std::vector<Rat> cumulative_;  // integral up to each breakpoint
};

IntegralTransform integral_transform(const PiecewiseFn& varphi);

/// tau composed with a piecewise function, as a plain evaluator.
ScalarFn compose(const IntegralTransform& tau, const PiecewiseFn& inner);

}  // namespace gmet
