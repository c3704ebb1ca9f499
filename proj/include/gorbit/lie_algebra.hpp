#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gorbit/linalg.hpp"
#include "gorbit/rational.hpp"

namespace gorbit {

struct BracketTerm {
  std::size_t k = 0;
  Rational c;
  friend bool operator==(const BracketTerm& a, const BracketTerm& b) { return a.k == b.k && a.c == b.c; }
};

/// Sparse table: (i, j) with i < j maps to the expansion of [e_i, e_j].
using StructureTable = std::map<std::pair<std::size_t, std::size_t>, std::vector<BracketTerm>>;

inline constexpr std::size_t kDefaultDimensionCap = 64;

/// Finite-dimensional Lie algebra over the rationals. Immutable; the
/// constructor checks the Jacobi identity on every basis triple.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> basis_names, const StructureTable& table,
             std::size_t dimension_cap = kDefaultDimensionCap);

  /// Shorthand with generated basis names e1..en.
  static LieAlgebra from_table(std::string name, std::size_t dim, const StructureTable& table);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return basis_names_.size(); }
  const std::vector<std::string>& basis_names() const noexcept { return basis_names_; }
  /// Canonical sparse table: zero coefficients dropped, terms sorted by k,
  /// empty brackets omitted.
  const StructureTable& table() const noexcept { return table_; }

  Vector bracket(const Vector& x, const Vector& y) const;
  /// [e_i, e_j] as a dense vector.
  const Vector& basis_bracket(std::size_t i, std::size_t j) const { return dense_[i * dim() + j]; }
  /// Matrix of ad(x): column j is [x, e_j].
  Matrix ad(const Vector& x) const;
  const Matrix& ad_basis(std::size_t i) const { return ad_basis_[i]; }

 private:
  std::string name_;
  std::vector<std::string> basis_names_;
  StructureTable table_;
  std::vector<Vector> dense_;
  std::vector<Matrix> ad_basis_;
};

/// Evaluates the cyclic Jacobi sum on (e_i, e_j, e_k).
Vector jacobi_residual(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k);

}  // namespace gorbit
