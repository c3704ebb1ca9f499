#include "gorbit/linalg.hpp"

#include <utility>

#include "gorbit/error.hpp"

namespace gorbit {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorKind::DimensionMismatch, "row length does not match column count");
    }
    m.set_row(r, rows[r]);
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Rational Matrix::trace() const {
  Rational sum = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) sum += (*this)(i, i);
  return sum;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!gorbit::is_zero(x)) return false;
  }
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (!is_zero(bkj)) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix out(a);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix out(a);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  }
  return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix out(a);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) *= s;
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  Vector out = zero_vector(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!is_zero(v[c]) && !is_zero(a(r, c))) out[r] += a(r, c) * v[c];
    }
  }
  return out;
}

Vector left_multiply(const Vector& v, const Matrix& a) {
  Vector out = zero_vector(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (is_zero(v[r])) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!is_zero(a(r, c))) out[c] += v[r] * a(r, c);
    }
  }
  return out;
}

Rational bilinear(const Matrix& q, const Vector& x, const Vector& y) {
  return dot(x, q * y);
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Echelon rref(Matrix m) {
  Echelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    }
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) {
      if (!is_zero(m(lead_row, k))) m(lead_row, k) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || is_zero(m(r, c))) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!is_zero(m(lead_row, k))) m(r, k) -= factor * m(lead_row, k);
      }
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  Matrix reduced(out.pivots.size(), m.cols());
  for (std::size_t r = 0; r < out.pivots.size(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = m(r, c);
  }
  out.reduced = std::move(reduced);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix nullspace(const Matrix& a) {
  const Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(basis, a.cols());
}

LinearSolution solve(const Matrix& a, const Vector& b) {
  Matrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
    augmented(r, a.cols()) = b[r];
  }
  const Echelon e = rref(std::move(augmented));
  LinearSolution out;
  out.rank_augmented = e.rank();
  out.rank_coefficients = e.rank();
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
    out.rank_coefficients = e.rank() - 1;
    // Farkas-style certificate: a left-null vector of a that sees b.
    const Matrix left_null = nullspace(a.transpose());
    for (std::size_t k = 0; k < left_null.rows(); ++k) {
      Vector y = left_null.row(k);
      const Rational yb = dot(y, b);
      if (!is_zero(yb)) {
        out.certificate = scale(y, 1 / yb);
        break;
      }
    }
    return out;
  }
  Vector x = zero_vector(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  out.solution = std::move(x);
  return out;
}

Matrix inverse(const Matrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  Matrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n + r) = 1;
  }
  const Echelon e = rref(std::move(augmented));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) {
    throw Error(ErrorKind::InvalidArgument, "matrix is singular");
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  }
  return inv;
}

Rational determinant(const Matrix& a) {
  Matrix m(a);
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && is_zero(m(pivot, c))) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      const Rational factor = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
    }
  }
  return det;
}

Inertia inertia(const Matrix& symmetric) {
  Matrix m(symmetric);
  std::size_t n = m.rows();
  Inertia out;
  // Congruence steps on the trailing block [k, n).
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (!is_zero(m(i, i))) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) {
      // No usable diagonal entry: combine two indices with a nonzero coupling.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!is_zero(m(i, j))) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) {
        out.zero += n - k;
        return out;
      }
      // row/col pi += row/col pj; new diagonal is 2 m(pi,pj) != 0.
      for (std::size_t c = 0; c < n; ++c) m(pi, c) += m(pj, c);
      for (std::size_t r = 0; r < n; ++r) m(r, pi) += m(r, pj);
      pivot = pi;
    }
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(m(r, pivot), m(r, k));
    }
    const Rational d = m(k, k);
    if (d > 0) ++out.positive; else ++out.negative;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (is_zero(m(r, k))) continue;
      const Rational factor = m(r, k) / d;
      for (std::size_t c = k; c < n; ++c) m(r, c) -= factor * m(k, c);
      for (std::size_t c = k; c < n; ++c) m(c, r) = m(r, c);
    }
  }
  return out;
}

bool is_positive_definite(const Matrix& s) { return inertia(s).positive == s.rows(); }
bool is_negative_definite(const Matrix& s) { return inertia(s).negative == s.rows(); }
bool is_negative_semidefinite(const Matrix& s) { return inertia(s).positive == 0; }

Vector EchelonBasis::reduce(Vector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational factor = v[pivots_[k]];
    if (!is_zero(factor)) axpy(v, -factor, rows_[k]);
  }
  return v;
}

bool EchelonBasis::contains(const Vector& v) const { return gorbit::is_zero(reduce(v)); }

bool EchelonBasis::insert(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < r.size() && is_zero(r[p])) ++p;
  if (p == r.size()) return false;
  const Rational inv = 1 / r[p];
  for (auto& x : r) {
    if (!is_zero(x)) x *= inv;
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

}  // namespace gorbit
