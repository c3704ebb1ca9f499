#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gorbit/rational.hpp"

namespace gorbit {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Rows given as vectors of length `cols`.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  /// Flattened row-major entries.
  const std::vector<Rational>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
/// Matrix acting on a column vector.
Vector operator*(const Matrix& a, const Vector& v);
/// Row vector times matrix.
Vector left_multiply(const Vector& v, const Matrix& a);
/// x^T Q y
Rational bilinear(const Matrix& q, const Vector& x, const Vector& y);
Matrix commutator(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;                    ///< reduced row-echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   ///< pivot column of each row
  std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis (as rows) of {x : a x = 0}, one vector per free column, with the
/// free variable set to 1.
Matrix nullspace(const Matrix& a);

/// Result of solving a x = b. When infeasible, `certificate` holds y with
/// y^T a = 0 and y^T b = 1.
struct LinearSolution {
  std::optional<Vector> solution;   ///< pivot solution, free variables zero
  std::size_t rank_coefficients = 0;
  std::size_t rank_augmented = 0;
  Vector certificate;
  bool feasible() const noexcept { return solution.has_value(); }
};

LinearSolution solve(const Matrix& a, const Vector& b);

/// Throws InvalidArgument for a singular matrix.
Matrix inverse(const Matrix& a);
Rational determinant(const Matrix& a);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Signature of a symmetric matrix by exact congruence diagonalisation.
Inertia inertia(const Matrix& symmetric);
bool is_positive_definite(const Matrix& symmetric);
bool is_negative_definite(const Matrix& symmetric);
bool is_negative_semidefinite(const Matrix& symmetric);

/// Incrementally built echelon basis. Row k carries zeros in the pivot
/// columns of all earlier rows, so reduction proceeds in insertion order.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t length) : length_(length) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }

  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  /// Returns true when v was independent of the current rows.
  bool insert(const Vector& v);

 private:
  std::size_t length_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace gorbit
