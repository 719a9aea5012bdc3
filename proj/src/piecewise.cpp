#include "gmet/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmet {

namespace {

// Index of the piece whose open interval contains t, assuming t is not a
// breakpoint below pieces.size() boundary handling: returns the greatest i
// with breakpoints[i] <= t.
size_t segment_index(const PiecewiseFn& f, const Rat& t) {
  auto it = std::upper_bound(f.breakpoints.begin(), f.breakpoints.end(), t);
  return static_cast<size_t>(it - f.breakpoints.begin()) - 1;
}

std::vector<Rat> merged_breakpoints(const PiecewiseFn& a, const PiecewiseFn& b) {
  std::vector<Rat> out;
  out.reserve(a.breakpoints.size() + b.breakpoints.size());
  std::merge(a.breakpoints.begin(), a.breakpoints.end(), b.breakpoints.begin(),
             b.breakpoints.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_shape(const PiecewiseFn& f) {
  if (f.breakpoints.empty() || f.breakpoints.front() != 0 ||
      f.breakpoints.size() != f.values.size() || f.pieces.size() != f.breakpoints.size())
    throw std::invalid_argument("malformed piecewise function");
  for (size_t i = 1; i < f.breakpoints.size(); ++i)
    if (f.breakpoints[i] <= f.breakpoints[i - 1])
      throw std::invalid_argument("breakpoints must be strictly ascending");
}

}  // namespace

Rat PiecewiseFn::eval(const Rat& t) const {
  if (t < 0) throw std::domain_error("control functions live on [0, inf)");
  auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), t);
  if (it != breakpoints.end() && *it == t)
    return values[static_cast<size_t>(it - breakpoints.begin())];
  return pieces[segment_index(*this, t)].at(t);
}

Rat PiecewiseFn::left_limit(size_t i) const { return pieces[i - 1].at(breakpoints[i]); }

Rat PiecewiseFn::right_limit(size_t i) const { return pieces[i].at(breakpoints[i]); }

void PiecewiseFn::canonicalize() {
  check_shape(*this);
  std::vector<Rat> bp{breakpoints[0]};
  std::vector<Rat> val{values[0]};
  std::vector<AffinePiece> pc{pieces[0]};
  for (size_t i = 1; i < breakpoints.size(); ++i) {
    bool mergeable = pieces[i] == pc.back() && values[i] == pieces[i].at(breakpoints[i]);
    if (mergeable) continue;
    bp.push_back(breakpoints[i]);
    val.push_back(values[i]);
    pc.push_back(pieces[i]);
  }
  breakpoints = std::move(bp);
  values = std::move(val);
  pieces = std::move(pc);
}

ScalarFn PiecewiseFn::to_fn() const {
  PiecewiseFn copy = *this;
  return [copy](const Rat& t) { return copy.eval(t); };
}

PiecewiseFn PiecewiseFn::linear(const Rat& slope) {
  return PiecewiseFn{{Rat(0)}, {Rat(0)}, {AffinePiece{slope, Rat(0)}}};
}

Rat eval_fn(const PiecewiseFn& f, const Rat& t) { return f.eval(t); }

ClassReport validate_psi(const PiecewiseFn& f) {
  ClassReport r = validate_phi(f);  // shares zero-iff-zero and lsc machinery

  for (size_t i = 0; i < f.breakpoints.size(); ++i) {
    const Rat& b = f.breakpoints[i];
    Rat rl = f.right_limit(i);
    bool left_ok = (i == 0) || f.left_limit(i) == f.values[i];
    if (!left_ok || f.values[i] != rl) {
      r.continuous.pass = false;
      r.continuous.witnesses.push_back({b, "breakpoint value differs from a one-sided limit"});
    }
  }

  for (size_t i = 0; i < f.pieces.size(); ++i)
    if (f.pieces[i].slope < 0) {
      r.nondecreasing.pass = false;
      r.nondecreasing.witnesses.push_back({f.breakpoints[i], "negative slope"});
    }
  for (size_t i = 0; i < f.breakpoints.size(); ++i) {
    bool up_ok = f.values[i] <= f.right_limit(i);
    bool down_ok = (i == 0) || f.left_limit(i) <= f.values[i];
    if (!up_ok || !down_ok) {
      r.nondecreasing.pass = false;
      r.nondecreasing.witnesses.push_back({f.breakpoints[i], "downward jump"});
    }
  }
  return r;
}

ClassReport validate_phi(const PiecewiseFn& f) {
  check_shape(f);
  ClassReport r;

  if (f.values[0] != 0) {
    r.zero_iff_zero.pass = false;
    r.zero_iff_zero.witnesses.push_back({Rat(0), "f(0) != 0"});
  }
  for (size_t i = 1; i < f.breakpoints.size(); ++i)
    if (f.values[i] <= 0) {
      r.zero_iff_zero.pass = false;
      r.zero_iff_zero.witnesses.push_back({f.breakpoints[i], "f(t) <= 0 at t > 0"});
    }
  for (size_t i = 0; i < f.pieces.size(); ++i) {
    const Rat& lo = f.breakpoints[i];
    Rat llim = f.pieces[i].at(lo);
    bool last = i + 1 == f.pieces.size();
    if (last) {
      // positive on (lo, inf) iff nonneg slope and positive entry limit, or
      // zero entry limit with strictly positive slope
      bool ok = f.pieces[i].slope >= 0 && (llim > 0 || (llim == 0 && f.pieces[i].slope > 0));
      if (f.pieces[i].slope < 0) ok = false;
      if (!ok) {
        r.zero_iff_zero.pass = false;
        r.zero_iff_zero.witnesses.push_back({lo, "not strictly positive on the final piece"});
      }
    } else {
      const Rat& hi = f.breakpoints[i + 1];
      Rat rlim = f.pieces[i].at(hi);
      Rat m = std::min(llim, rlim);
      bool ok = m > 0 || (m == 0 && f.pieces[i].slope != 0);
      if (llim < 0 || rlim < 0) ok = false;
      if (!ok) {
        r.zero_iff_zero.pass = false;
        r.zero_iff_zero.witnesses.push_back({lo, "not strictly positive on piece interior"});
      }
    }
  }

  for (size_t i = 0; i < f.breakpoints.size(); ++i) {
    bool ok = f.values[i] <= f.right_limit(i) && (i == 0 || f.values[i] <= f.left_limit(i));
    if (!ok) {
      r.lower_semicontinuous.pass = false;
      r.lower_semicontinuous.witnesses.push_back(
          {f.breakpoints[i], "breakpoint value exceeds a one-sided limit"});
    }
  }
  return r;
}

PiecewiseFn pw_diff(const PiecewiseFn& a, const PiecewiseFn& b) {
  PiecewiseFn out;
  out.breakpoints = merged_breakpoints(a, b);
  for (const Rat& t : out.breakpoints) {
    out.values.push_back(a.eval(t) - b.eval(t));
    const AffinePiece& pa = a.pieces[segment_index(a, t)];
    const AffinePiece& pb = b.pieces[segment_index(b, t)];
    out.pieces.push_back(AffinePiece{pa.slope - pb.slope, pa.intercept - pb.intercept});
  }
  out.canonicalize();
  return out;
}

PiecewiseFn pw_min(const PiecewiseFn& a, const PiecewiseFn& b) {
  std::vector<Rat> grid = merged_breakpoints(a, b);
  PiecewiseFn out;
  for (size_t gi = 0; gi < grid.size(); ++gi) {
    const Rat& u = grid[gi];
    const AffinePiece pa = a.pieces[segment_index(a, u)];
    const AffinePiece pb = b.pieces[segment_index(b, u)];
    Rat ds = pa.slope - pb.slope;
    Rat di = pa.intercept - pb.intercept;

    out.breakpoints.push_back(u);
    out.values.push_back(std::min(a.eval(u), b.eval(u)));

    bool bounded = gi + 1 < grid.size();
    auto lower_after = [&](const Rat& t) {
      Rat d = ds * t + di;
      if (d < 0) return pa;
      if (d > 0) return pb;
      return ds <= 0 ? pa : pb;  // tie at t: the smaller slope wins just after
    };
    out.pieces.push_back(lower_after(u));
    if (ds != 0) {
      Rat root = -di / ds;
      bool inside = root > u && (!bounded || root < grid[gi + 1]);
      if (inside) {
        out.breakpoints.push_back(root);
        out.values.push_back(pa.at(root));
        out.pieces.push_back(lower_after(root));
      }
    }
  }
  out.canonicalize();
  return out;
}

namespace {

void extreme_candidates(const PiecewiseFn& f, const Rat& lo, bool lo_closed, const Rat& hi,
                        bool hi_closed, std::vector<Rat>& out) {
  if (lo > hi || (lo == hi && !(lo_closed && hi_closed)))
    throw std::invalid_argument("empty interval");
  for (size_t i = 0; i < f.breakpoints.size(); ++i) {
    const Rat& b = f.breakpoints[i];
    if (b < lo || b > hi) continue;
    if ((b > lo || lo_closed) && (b < hi || hi_closed)) out.push_back(f.values[i]);
  }
  for (size_t i = 0; i < f.pieces.size(); ++i) {
    Rat s = std::max(f.breakpoints[i], lo);
    bool last = i + 1 == f.pieces.size();
    Rat e = last ? hi : std::min(f.breakpoints[i + 1], hi);
    if (s >= e) continue;  // no interior overlap
    out.push_back(f.pieces[i].at(s));
    out.push_back(f.pieces[i].at(e));
  }
  if (out.empty()) throw std::invalid_argument("interval contains no function values");
}

}  // namespace

Rat inf_on(const PiecewiseFn& f, const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed) {
  std::vector<Rat> c;
  extreme_candidates(f, lo, lo_closed, hi, hi_closed, c);
  return *std::min_element(c.begin(), c.end());
}

Rat sup_on(const PiecewiseFn& f, const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed) {
  std::vector<Rat> c;
  extreme_candidates(f, lo, lo_closed, hi, hi_closed, c);
  return *std::max_element(c.begin(), c.end());
}

Phi1Result construct_phi1(const PiecewiseFn& psi, const PiecewiseFn& phi, const Rat& alpha,
                          int depth) {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (!validate_psi(psi).psi_ok()) throw std::invalid_argument("psi candidate rejected");
  if (!validate_phi(phi).phi_ok()) throw std::invalid_argument("phi candidate rejected");

  // hypothesis: psi >= phi pointwise
  PiecewiseFn diff = pw_diff(psi, phi);
  for (size_t i = 0; i < diff.breakpoints.size(); ++i) {
    if (diff.values[i] < 0)
      throw std::invalid_argument("hypothesis psi >= phi fails at t = " +
                                  rat_str(diff.breakpoints[i]));
    bool last = i + 1 == diff.pieces.size();
    Rat endv = last ? diff.pieces[i].at(diff.breakpoints[i] + 1)
                    : diff.pieces[i].at(diff.breakpoints[i + 1]);
    if (diff.pieces[i].at(diff.breakpoints[i]) < 0 || endv < 0 ||
        (last && diff.pieces[i].slope < 0))
      throw std::invalid_argument("hypothesis psi >= phi fails on a piece after t = " +
                                  rat_str(diff.breakpoints[i]));
  }

  const int N = depth;
  auto require_pos = [](const Rat& v, const char* what) {
    if (v <= 0)
      throw std::invalid_argument(std::string("construction failed: ") + what +
                                  " is not positive (invalid phi input)");
    return v;
  };

  // a_n = psi(alpha/n) - sup over [0, alpha/n] of (psi - phi), n = 1..N+1
  std::vector<Rat> a(N + 2);
  for (int n = 1; n <= N + 1; ++n) {
    Rat an = alpha / n;
    a[n] = require_pos(psi.eval(an) - sup_on(diff, Rat(0), true, an, true), "a_n");
  }
  Rat b = require_pos(inf_on(phi, alpha, false, 2 * alpha, false), "inf phi on (alpha,2alpha)");
  std::vector<Rat> bn(N + 1), cn(N + 1);
  for (int n = 1; n <= N; ++n) {
    bn[n] = require_pos(inf_on(phi, alpha / (n + 1), false, alpha / n, true), "b_n");
    cn[n] = require_pos(inf_on(phi, alpha * (n + 1), true, alpha * (n + 2), false), "c_n");
  }

  // nested constants: K_n on (alpha/(n+1), alpha/n], Kmid on (alpha, 2alpha),
  // L_n on [(n+1)alpha, (n+2)alpha)
  Rat kmid = std::min(b, a[1]);
  std::vector<Rat> K(N + 1), L(N + 1);
  Rat acc = kmid;
  for (int n = 1; n <= N; ++n) {
    acc = std::min({acc, bn[n], a[n + 1]});
    K[n] = acc;
  }
  acc = kmid;
  for (int n = 1; n <= N; ++n) {
    acc = std::min(acc, cn[n]);
    L[n] = acc;
  }

  PiecewiseFn out;
  auto push = [&](const Rat& bp, const Rat& val, const Rat& piece_const) {
    out.breakpoints.push_back(bp);
    out.values.push_back(val);
    out.pieces.push_back(AffinePiece{Rat(0), piece_const});
  };
  push(Rat(0), Rat(0), K[N]);  // constant K_N extends below alpha/(N+1) (truncation)
  for (int n = N; n >= 1; --n) {
    Rat bp = alpha / (n + 1);
    // value at alpha/(n+1) belongs to the deeper interval; below truncation
    // depth it is approximated by K_N
    Rat val = (n == N) ? K[N] : K[n + 1];
    push(bp, val, K[n]);
  }
  push(alpha, K[1], kmid);
  for (int n = 1; n <= N; ++n) push(alpha * (n + 1), L[n], L[n]);
  out.canonicalize();

  Phi1Result res;
  res.fn = std::move(out);
  res.truncated = true;
  res.depth = N;
  res.alpha = alpha;
  return res;
}

PiecewiseFn construct_phi2(const PiecewiseFn& psi, const PiecewiseFn& phi) {
  if (!validate_psi(psi).psi_ok()) throw std::invalid_argument("psi candidate rejected");
  if (!validate_phi(phi).phi_ok()) throw std::invalid_argument("phi candidate rejected");

  PiecewiseFn delta = pw_diff(phi, psi);  // exceedance where delta > 0

  // maximal intervals (open; last may be unbounded) where delta > 0 on the
  // interior; piecewise-affine delta changes sign finitely often
  struct Region {
    Rat lo, hi;
    bool unbounded = false;
  };
  std::vector<Region> regions;
  auto add_region = [&](const Rat& lo, const Rat& hi, bool unb) {
    if (!regions.empty() && regions.back().hi == lo && delta.eval(lo) > 0) {
      regions.back().hi = hi;
      regions.back().unbounded = unb;
    } else {
      regions.push_back({lo, hi, unb});
    }
  };
  for (size_t i = 0; i < delta.pieces.size(); ++i) {
    const Rat& u = delta.breakpoints[i];
    bool last = i + 1 == delta.pieces.size();
    const AffinePiece& p = delta.pieces[i];
    Rat lo_lim = p.at(u);
    if (last) {
      if (p.slope > 0) {
        Rat start = lo_lim > 0 ? u : std::max(u, Rat(-p.intercept / p.slope));
        add_region(start, start, true);
      } else if (p.slope < 0) {
        if (lo_lim > 0) add_region(u, -p.intercept / p.slope, false);
      } else if (p.intercept > 0) {
        add_region(u, u, true);
      }
      continue;
    }
    const Rat& v = delta.breakpoints[i + 1];
    Rat hi_lim = p.at(v);
    if (lo_lim <= 0 && hi_lim <= 0) continue;
    Rat lo = u, hi = v;
    if (p.slope != 0) {
      Rat root = -p.intercept / p.slope;
      if (lo_lim <= 0 && root > u) lo = root;
      if (hi_lim <= 0 && root < v) hi = root;
    }
    if (lo < hi) add_region(lo, hi, false);
  }
  if (regions.empty()) return phi;  // phi <= psi everywhere

  const Region* unb = regions.back().unbounded ? &regions.back() : nullptr;
  Rat tail_const = unb ? phi.eval(unb->lo) : Rat(0);
  // a tail starting at 0 would get the constant phi(0) = 0, which is not
  // admissible; fall back to psi there (still below both inputs)
  bool tail_use_psi = unb && tail_const == 0;

  auto region_of = [&](const Rat& t) -> const Region* {
    for (const auto& r : regions)
      if (t > r.lo && (r.unbounded || t < r.hi)) return &r;
    return nullptr;
  };

  // rebuild on the union of both breakpoint grids plus region endpoints
  std::vector<Rat> grid = merged_breakpoints(phi, psi);
  for (const auto& r : regions) {
    grid.push_back(r.lo);
    if (!r.unbounded) grid.push_back(r.hi);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  PiecewiseFn out;
  for (size_t i = 0; i < grid.size(); ++i) {
    const Rat& t = grid[i];
    const Region* rv = region_of(t);
    Rat val = rv ? (rv->unbounded && !tail_use_psi ? tail_const : psi.eval(t)) : phi.eval(t);
    // source of the open segment just after t: probe its membership via the
    // region containing (t, next); segment never straddles a region endpoint
    const Region* rs = nullptr;
    for (const auto& r : regions)
      if (t >= r.lo && (r.unbounded || t < r.hi)) rs = &r;
    AffinePiece piece;
    if (rs && rs->unbounded && !tail_use_psi)
      piece = AffinePiece{Rat(0), tail_const};
    else if (rs)
      piece = psi.pieces[segment_index(psi, t)];
    else
      piece = phi.pieces[segment_index(phi, t)];
    out.breakpoints.push_back(t);
    out.values.push_back(val);
    out.pieces.push_back(piece);
  }
  out.canonicalize();
  return out;
}

IntegralTransform::IntegralTransform(PiecewiseFn integrand) : integrand_(std::move(integrand)) {
  check_shape(integrand_);
  // strictly positive on every piece interior, so the transform is strictly
  // increasing
  for (size_t i = 0; i < integrand_.pieces.size(); ++i) {
    const AffinePiece& p = integrand_.pieces[i];
    const Rat& lo = integrand_.breakpoints[i];
    Rat llim = p.at(lo);
    bool last = i + 1 == integrand_.pieces.size();
    bool ok;
    if (last) {
      ok = p.slope >= 0 && (llim > 0 || (llim == 0 && p.slope > 0));
    } else {
      Rat rlim = p.at(integrand_.breakpoints[i + 1]);
      Rat m = std::min(llim, rlim);
      ok = m > 0 || (m == 0 && p.slope != 0 && llim >= 0 && rlim >= 0);
    }
    if (!ok)
      throw std::invalid_argument("integrand must be strictly positive on piece interiors");
  }
  cumulative_.assign(integrand_.breakpoints.size(), Rat(0));
  for (size_t i = 1; i < integrand_.breakpoints.size(); ++i) {
    const Rat& s = integrand_.breakpoints[i - 1];
    const Rat& e = integrand_.breakpoints[i];
    const AffinePiece& p = integrand_.pieces[i - 1];
    cumulative_[i] = cumulative_[i - 1] + p.slope / 2 * (e * e - s * s) + p.intercept * (e - s);
  }
}

Rat IntegralTransform::operator()(const Rat& x) const {
  if (x < 0) throw std::domain_error("transform argument must be nonnegative");
  size_t i = segment_index(integrand_, x);
  const Rat& s = integrand_.breakpoints[i];
  const AffinePiece& p = integrand_.pieces[i];
  return cumulative_[i] + p.slope / 2 * (x * x - s * s) + p.intercept * (x - s);
}

IntegralTransform integral_transform(const PiecewiseFn& varphi) {
  return IntegralTransform(varphi);
}

ScalarFn compose(const IntegralTransform& tau, const PiecewiseFn& inner) {
  PiecewiseFn f = inner;
  IntegralTransform t = tau;
  return [t, f](const Rat& x) { return t(f.eval(x)); };
}

}  // namespace gmet
