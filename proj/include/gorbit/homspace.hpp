#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gorbit/lie_algebra.hpp"
#include "gorbit/linalg.hpp"
#include "gorbit/polynomial.hpp"
#include "gorbit/subspace.hpp"

namespace gorbit {

/// Inner product on m: an explicit Gram matrix in m's echelon basis, or a
/// positive multiple of -B restricted to m.
struct MetricSpec {
  enum class Kind { Explicit, KillingMultiple };
  Kind kind = Kind::KillingMultiple;
  Matrix matrix;
  Rational factor = 1;

  static MetricSpec explicit_matrix(Matrix m) { return {Kind::Explicit, std::move(m), 1}; }
  static MetricSpec killing_multiple(Rational f) { return {Kind::KillingMultiple, {}, std::move(f)}; }
};

enum class ComplementStrategy {
  KillingOrthogonal,
  LeviSplit,
  NilradicalAdapted,
  Rem1Variant,
  Explicit,
  FormOrthogonal,
};

const char* to_string(ComplementStrategy s);
std::optional<ComplementStrategy> parse_strategy(const std::string& name);

struct ComplementSpec {
  ComplementStrategy strategy = ComplementStrategy::KillingOrthogonal;
  std::optional<Subspace> levi;          ///< LeviSplit, NilradicalAdapted, Rem1Variant
  std::optional<Subspace> m;             ///< Explicit
  std::optional<Matrix> ambient_form;    ///< FormOrthogonal: symmetric form on g
};

/// (g, h, m, ip) with g = h + m, [h,m] in m and ip ad(h)-invariant. The
/// constructor validates everything and caches the bracket tables used by
/// the checkers. Vectors named `*_c` below are coordinates in the echelon
/// basis of m (or h).
class MetricReductiveSpace {
 public:
  MetricReductiveSpace(std::shared_ptr<const LieAlgebra> g, Subspace h, Subspace m, Matrix ip);

  const LieAlgebra& g() const noexcept { return *g_; }
  const std::shared_ptr<const LieAlgebra>& algebra_ptr() const noexcept { return g_; }
  const Subspace& h() const noexcept { return h_; }
  const Subspace& m() const noexcept { return m_; }
  const Matrix& ip() const noexcept { return ip_; }
  const Matrix& ip_inverse() const noexcept { return ip_inverse_; }
  const Matrix& killing() const noexcept { return killing_; }
  std::size_t dim_m() const noexcept { return m_.dim(); }
  std::size_t dim_h() const noexcept { return h_.dim(); }

  Vector m_part(const Vector& v) const { return split_.component_coordinates(v, 1); }
  Vector h_part(const Vector& v) const { return split_.component_coordinates(v, 0); }
  Vector from_m(const Vector& m_c) const { return m_.embed(m_c); }
  Vector from_h(const Vector& h_c) const { return h_.embed(h_c); }

  Rational inner(const Vector& x_c, const Vector& y_c) const { return bilinear(ip_, x_c, y_c); }
  /// [x, y]_m for x, y in m.
  Vector bracket_m(const Vector& x_c, const Vector& y_c) const;
  const Vector& basis_bracket_m(std::size_t i, std::size_t j) const { return mm_m_[i * dim_m() + j]; }
  const Vector& basis_bracket_h(std::size_t i, std::size_t j) const { return mm_h_[i * dim_m() + j]; }
  /// ad(h_a) on m in m-coordinates.
  const Matrix& h_action(std::size_t a) const { return h_action_[a]; }

  /// -B on h, ip on m, h orthogonal to m; ad(h)-invariant on g.
  Matrix extended_form() const;

 private:
  std::shared_ptr<const LieAlgebra> g_;
  Subspace h_;
  Subspace m_;
  Matrix ip_;
  Matrix ip_inverse_;
  Matrix killing_;
  DirectSum split_;
  std::vector<Vector> mm_m_;
  std::vector<Vector> mm_h_;
  std::vector<Matrix> h_action_;
};

MetricReductiveSpace build_reductive(const LieAlgebra& g, const Subspace& h, const MetricSpec& metric,
                                     const ComplementSpec& complement);
MetricReductiveSpace build_reductive(std::shared_ptr<const LieAlgebra> g, const Subspace& h,
                                     const MetricSpec& metric, const ComplementSpec& complement);

/// U(X,Y) from 2(U(X,Y),Z) = ([Z,X]_m,Y) + (X,[Z,Y]_m); m-coordinates.
Vector u_map(const MetricReductiveSpace& space, const Vector& x_c, const Vector& y_c);
/// -1/2 [X,Y]_m + U(X,Y)
Vector nabla_at_origin(const MetricReductiveSpace& space, const Vector& x_c, const Vector& y_c);

struct KillingOperatorSpectrum {
  enum class Mode { Exact, Numeric };
  Mode mode = Mode::Exact;
  Matrix a;                          ///< B|m = ip * A, m-coordinates
  Polynomial characteristic;
  std::vector<Rational> eigenvalues; ///< exact mode, increasing
  std::vector<Subspace> eigenspaces; ///< exact mode, subspaces of g
  std::vector<double> numeric_eigenvalues;  ///< numeric mode, with multiplicity
  std::optional<bool> zero_eigenspace_is_ideal;
  std::vector<std::string> warnings;
};

KillingOperatorSpectrum killing_operator_decomposition(const MetricReductiveSpace& space);

struct Submodule {
  Subspace space;                      ///< subspace of g inside m
  std::optional<Rational> eigenvalue;  ///< eigenvalue of A when known exactly
  bool irreducible_certified = false;
  std::size_t commutant_dim = 0;       ///< dim of the ip-symmetric commutant
};

/// ip-orthogonal ad(h)-irreducible modules refining the eigenspaces of A,
/// ordered by eigenvalue and then by pivot columns.
std::vector<Submodule> submodule_decomposition(const MetricReductiveSpace& space);
/// Same refinement applied to a single ad(h)-invariant subspace of m.
std::vector<Submodule> refine_module(const MetricReductiveSpace& space, const Subspace& module);
/// ip-orthogonal complement of p inside q (both subspaces of g within m).
Subspace m_orthocomplement(const MetricReductiveSpace& space, const Subspace& p, const Subspace& within);

struct IsotropySplit {
  Subspace phi_image;
  Subspace psi_image;
  Subspace ker_psi;  ///< h & r
  Subspace h_cap_s;
  Subspace h2;
  std::vector<std::string> failed_checks;
};

/// Throws LeviNotInvariant unless s is a Levi factor with [h, s] in s.
IsotropySplit isotropy_levi_split(const MetricReductiveSpace& space, const Subspace& s);

struct NormalizerStructures {
  Subspace centralizer_m;  ///< C_g(h) & m
  Subspace h_m;            ///< [h, m]
  Subspace k;              ///< C_g(h) + [h, h]
  Subspace normalizer;     ///< normaliser of h in g
  Subspace q;              ///< orthocomplement of [r,g] in r & m
  bool split_is_direct = false;
  bool split_ip_orthogonal = false;
  bool split_killing_orthogonal = false;
  bool normalizer_matches = false;
};

NormalizerStructures normalizer_structures(const MetricReductiveSpace& space);

}  // namespace gorbit
