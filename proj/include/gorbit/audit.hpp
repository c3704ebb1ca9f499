#pragma once

#include <optional>

#include "gorbit/go_checker.hpp"
#include "gorbit/homspace.hpp"
#include "gorbit/report.hpp"
#include "gorbit/structure.hpp"

namespace gorbit {

// Audits of structural consequences of the GO property. Each one records the
// verdict it was run under; with enforce_precondition set and a NotGO
// verdict every clause is reported as skipped. Invariant complements are
// orthogonal complements for the extended form (-B on h, ip on m).

/// Killing form on the radical: B <= 0 on a complement of [g,r] in r with
/// null vectors exactly the central ones, B < 0 on a complement of n in r,
/// and n = ker B = [g,r] + l with l central.
AuditReport strucrad1_audit(const MetricReductiveSpace& space, const GOVerdict& verdict,
                            const AuditOptions& options = {});

/// Nilradical and [g,r] are abelian or two-step nilpotent.
AuditReport strucnilr_audit(const MetricReductiveSpace& space, const GOVerdict& verdict,
                            const AuditOptions& options = {});
/// Same for a nilpotent algebra taken as its own nilradical.
AuditReport strucnilr_audit(const LieAlgebra& n, const GOVerdict& verdict, const AuditOptions& options = {});

/// Skewness of ad(C_g(h)) on m, ([X,Z]_m, X) = 0 for X in C_g(h) & m,
/// B <= 0 on C_g(h) + [h,h] with kernel in the centre, C_g(h) & n = z(g).
AuditReport skew_centralizer_audit(const MetricReductiveSpace& space, const GOVerdict& verdict,
                                   const SampleConfig& config = {}, const AuditOptions& options = {});

struct QuotientConstruction {
  Subspace k;  ///< C_g(h) + [h,h]
  Subspace l;  ///< largest ideal of g inside k
  bool degenerate = false;
  std::optional<Quotient> quotient;
  std::optional<MetricReductiveSpace> space;  ///< (g/l, image of k, [h,m])
  std::optional<GOVerdict> verdict;
  AuditReport report;
};

/// Builds g/l with isotropy the image of k and m~ = [h,m], runs go_check on
/// it and audits its radical, nilradical and isotropy modules.
QuotientConstruction quotient_go_construction(const MetricReductiveSpace& space, const GOVerdict& verdict,
                                              const SampleConfig& config = {}, const AuditOptions& options = {});

/// Orbit of a subalgebra k normalised by h. Builds m' = p + q with p an
/// invariant complement of k & h in k and q one of h + k in g, transports
/// the metric and checks that p is totally geodesic. Throws NotNormalized
/// when [h,k] is not in k and NotASubalgebra when k is not closed.
AuditReport normalized_orbit_audit(const MetricReductiveSpace& space, const Subspace& k_sub,
                                   const GOVerdict& verdict, const AuditOptions& options = {});

/// Ideals C_h(p) and [p,p]_h of h for an invariant p in m with [p,p] in
/// p + h, the four sufficient conditions for B(C_h(p), [p,p]_h) = 0 and the
/// splitting h = [p,p]_h + C_h(p) when B(h,m) = 0 and B|p is nondegenerate.
AuditReport irred1_audit(const MetricReductiveSpace& space, const Subspace& p);

/// Properties of a Levi factor s adapted to a compactly embedded k. The
/// compactness claims are only checked through necessary conditions.
AuditReport goodlevi_audit(const LieAlgebra& g, const Subspace& k, const Subspace& s);

}  // namespace gorbit
