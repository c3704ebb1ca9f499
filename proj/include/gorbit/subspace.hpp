#pragma once

#include <cstddef>
#include <vector>

#include "gorbit/linalg.hpp"
#include "gorbit/rational.hpp"

namespace gorbit {

/// Linear subspace of Q^n held as the reduced row-echelon basis, so two
/// subspaces are equal iff their bases are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  Subspace(std::size_t ambient, const std::vector<Vector>& spanning);

  static Subspace full(std::size_t ambient);
  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return basis_.rows() == 0; }
  bool is_full() const noexcept { return basis_.rows() == ambient_; }

  const Matrix& basis_matrix() const noexcept { return basis_; }
  Vector basis_vector(std::size_t k) const { return basis_.row(k); }
  std::vector<Vector> basis() const { return basis_.row_vectors(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the echelon basis; v must lie in the subspace.
  Vector coordinates(const Vector& v) const;
  /// Inverse of coordinates.
  Vector embed(const Vector& coords) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// {x in within : q(x, s) = 0 for all s in s_sub}; q is a symmetric matrix on
/// the ambient space.
Subspace orthogonal_complement(const Matrix& q, const Subspace& s_sub, const Subspace& within);

/// Image of a linear map given by a matrix acting on column vectors.
Subspace image(const Matrix& a, const Subspace& domain);
/// {x : a x = 0}
Subspace kernel(const Matrix& a);

/// Splits the ambient space along a list of subspaces whose direct sum is a
/// given total space. component(v, k) returns the part of v in parts[k].
class DirectSum {
 public:
  DirectSum() = default;
  explicit DirectSum(std::vector<Subspace> parts);

  const std::vector<Subspace>& parts() const noexcept { return parts_; }
  const Subspace& total() const noexcept { return total_; }
  /// Coordinates of v with respect to parts[k]'s echelon basis.
  Vector component_coordinates(const Vector& v, std::size_t k) const;
  Vector component(const Vector& v, std::size_t k) const;

 private:
  std::vector<Subspace> parts_;
  Subspace total_;
  // Rows: coordinates of the ambient unit vectors are obtained from
  // `solver_` applied to coordinates of v in `total_`.
  Matrix solver_;
  std::vector<std::size_t> offsets_;
};

}  // namespace gorbit
