#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorbit/lie_algebra.hpp"
#include "gorbit/linalg.hpp"
#include "gorbit/subspace.hpp"

namespace gorbit {

/// Matrix of B(e_i, e_j) = trace(ad e_i ad e_j).
Matrix killing_form(const LieAlgebra& g);

/// Gram matrix of q restricted to the echelon basis of s.
Matrix restrict_form(const Matrix& q, const Subspace& s);

/// span{[a, b] : a in a_sub, b in b_sub}
Subspace bracket_space(const LieAlgebra& g, const Subspace& a_sub, const Subspace& b_sub);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
/// Rows w with w . x = 0 for exactly the x in s.
Matrix annihilator(const Subspace& s);

struct SeriesReport {
  std::vector<Subspace> derived_series;        ///< s, [s,s], ... until stable
  std::vector<Subspace> lower_central_series;  ///< s, [s,s], [s,[s,s]], ... until stable
  bool is_solvable = false;
  bool is_nilpotent = false;
  /// Number of nonzero terms of the lower central series when nilpotent.
  std::optional<std::size_t> nilpotency_class;
};

SeriesReport series_analysis(const LieAlgebra& g);
/// Series of the subalgebra s (brackets taken inside s).
SeriesReport series_analysis(const LieAlgebra& g, const Subspace& s);

Subspace radical(const LieAlgebra& g);
Subspace nilradical(const LieAlgebra& g);

struct CommutantReport {
  Subspace center;
  Subspace centralizer;
  std::optional<Subspace> normalizer;  ///< absent when s is not a subalgebra
  Subspace derived_with;               ///< [g, s]
};

Subspace center(const LieAlgebra& g);
Subspace centralizer(const LieAlgebra& g, const Subspace& s, const Subspace& within);
Subspace centralizer(const LieAlgebra& g, const Subspace& s);
/// Throws NotASubalgebra when s is not closed under the bracket.
Subspace normalizer(const LieAlgebra& g, const Subspace& s);
CommutantReport commutant_queries(const LieAlgebra& g, const Subspace& s);

Subspace largest_ideal_in(const LieAlgebra& g, const Subspace& k);

struct Quotient {
  LieAlgebra algebra;
  /// Maps coordinates in g to coordinates in the quotient.
  Matrix projection;
  /// Basis indices of g whose images form the quotient basis.
  std::vector<std::size_t> representatives;
};

/// Throws NotAnIdeal when l is not an ideal.
Quotient quotient_algebra(const LieAlgebra& g, const Subspace& l);

struct DerivationBasis {
  std::vector<Matrix> basis;
  bool skew = false;
};

/// Der(g), or the metric-skew derivations when `metric` is given.
DerivationBasis derivations(const LieAlgebra& g, const std::optional<Matrix>& metric = std::nullopt);

struct LeviCheck {
  bool ok = false;
  std::vector<std::string> diagnostics;
};

LeviCheck verify_levi(const LieAlgebra& g, const Subspace& s);

}  // namespace gorbit

namespace gorbit {

/// Matrix of ad(z) restricted to an ad(z)-invariant subspace v, in v's
/// echelon coordinates.
Matrix restricted_action(const LieAlgebra& g, const Vector& z, const Subspace& v);

/// An ad(h)-invariant complement of w inside v (both ad(h)-invariant), taken
/// as the kernel of the pivot solution of the equivariant projection system.
/// Throws ComplementNotInvariant when no equivariant projection exists.
Subspace invariant_complement(const LieAlgebra& g, const Subspace& h, const Subspace& w, const Subspace& v);

}  // namespace gorbit
