#pragma once

#include "gmet/piecewise.hpp"
#include "gmet/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gmet {

/// The contraction inequalities checked by this toolkit. The first three
/// quantify over comparable triples x<=y<=z; the rest over comparable pairs.
enum class ContractionKind {
  Thm21_M,       // psi(G(Tx,Ty,Tz)) <= psi(M(x,y,z)) - phi(M(x,y,z))
  Thm25_G,       // psi(G(Tx,Ty,Tz)) <= psi(G(x,y,z)) - phi(G(x,y,z))
  Thm26_N,       // psi(G(Tx,Ty,T2x)) <= psi(N(x,y)) - phi(N(x,y))
  Thm27_GxTxy,   // psi(G(Tx,T2x,Ty)) <= psi(G(x,Tx,y)) - phi(G(x,Tx,y))
  M1Variant,     // Thm21 with the seven-term unaveraged maximum
  Metric_PsiPhi, // psi(d(Tx,Ty)) <= psi(d(x,y)) - phi(d(x,y))
  Metric_GenM,   // psi(d(Tx,Ty)) <= psi(M_d(x,y)) - phi(M_d(x,y))
  KA_15,         // G(Tx,T2x,Ty) <= G(x,Tx,y) - phi(G(x,Tx,y)), psi = identity
};

bool kind_uses_triples(ContractionKind k);
std::string kind_name(ContractionKind k);
std::optional<ContractionKind> kind_from_name(const std::string& name);

/// Six-term maximum functional of the triple inequality. nullopt when a
/// required image leaves a truncated carrier.
std::optional<Rat> compute_M(const Space& s, const SelfMap& T, PointId x, PointId y, PointId z);

/// Seven-term variant: the averaged pair of M replaced by both raw terms.
std::optional<Rat> compute_M1(const Space& s, const SelfMap& T, PointId x, PointId y, PointId z);

/// Four-term maximum of the pair inequality, third argument derived as Tx.
std::optional<Rat> compute_N(const Space& s, const SelfMap& T, PointId x, PointId y);

/// Metric-form generalized maximum max{d(x,y), d(x,Tx), d(y,Ty), avg}.
std::optional<Rat> compute_metric_M(const Space& s, const SelfMap& T, PointId x, PointId y);

struct Violation {
  std::vector<PointId> tuple;
  Rat lhs;        // psi(distance of images)
  Rat functional; // F value the inequality is measured against
  Rat rhs;        // psi(F) - phi(F)
};

struct ContractionReport {
  ContractionKind kind = ContractionKind::Thm21_M;
  std::string verdict;  // "pass" | "pass_on_grid" | "fail"
  long checked = 0;
  std::vector<Violation> violations;
  bool truncated = false;
  bool pass() const { return violations.empty(); }
};

/// Checks the kind's inequality over every comparable tuple of its shape.
/// Tuples whose images leave a truncated carrier are skipped and flagged.
ContractionReport check_contraction(const Space& s, const SelfMap& T, const ScalarFn& psi,
                                    const ScalarFn& phi, ContractionKind kind);

ContractionReport check_contraction(const Space& s, const SelfMap& T, const PiecewiseFn& psi,
                                    const PiecewiseFn& phi, ContractionKind kind);

/// Largest ratio lhs / F over tuples with F > 0 (the sharpest linear
/// contraction constant the data admits), or nullopt when no such tuple.
std::optional<Rat> max_contraction_ratio(const Space& s, const SelfMap& T, ContractionKind kind);

struct NonequivalenceWitness {
  PointId x = 0, y = 0;
  Rat metric_M;   // generalized metric maximum at (x,y)
  Rat lhs;        // G(Tx,Ty,Ty) = d(Tx,Ty)
  Rat g_xyy;      // G(x,y,y), the plain-G right-hand side
  bool defeats_plain_g = false;  // lhs > G(x,y,y) as well
};

/// Scans comparable pairs of a numeric carrier for a pair with
/// d(Tx,Ty) > M_d(x,y) > 0; such a pair defeats every admissible (psi, phi)
/// for the metric-form inequality at once. First witness in lexicographic
/// order, or nullopt.
std::optional<NonequivalenceWitness> find_nonequivalence_witness(const Space& s, const SelfMap& T);

}  // namespace gmet
