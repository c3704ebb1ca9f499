#include "gorbit/subspace.hpp"

#include "gorbit/error.hpp"

namespace gorbit {

Subspace::Subspace(std::size_t ambient, const std::vector<Vector>& spanning) : ambient_(ambient) {
  for (const auto& v : spanning) {
    if (v.size() != ambient) throw Error(ErrorKind::DimensionMismatch, "spanning vector has wrong length");
  }
  Echelon e = rref(Matrix::from_rows(spanning, ambient));
  basis_ = std::move(e.reduced);
  pivots_ = std::move(e.pivots);
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < ambient; ++i) rows.push_back(unit_vector(ambient, i));
  return Subspace(ambient, rows);
}

bool Subspace::contains(const Vector& v) const {
  // With a reduced echelon basis, v lies in the span iff v equals the
  // combination read off its pivot entries.
  return embed(coordinates(v)) == v;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t k = 0; k < other.dim(); ++k) {
    if (!contains(other.basis_vector(k))) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector c(pivots_.size());
  for (std::size_t r = 0; r < pivots_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Vector Subspace::embed(const Vector& coords) const {
  Vector out = zero_vector(ambient_);
  for (std::size_t r = 0; r < coords.size(); ++r) {
    if (gorbit::is_zero(coords[r])) continue;
    for (std::size_t c = pivots_[r]; c < ambient_; ++c) {
      if (!gorbit::is_zero(basis_(r, c))) out[c] += coords[r] * basis_(r, c);
    }
  }
  return out;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  std::vector<Vector> rows = a.basis();
  for (auto& v : b.basis()) rows.push_back(std::move(v));
  return Subspace(a.ambient(), rows);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  // x = sum s_i a_i = sum t_j b_j  <=>  [A^T | -B^T] (s, t) = 0.
  const std::size_t n = a.ambient();
  Matrix m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis_matrix()(i, r);
  }
  for (std::size_t j = 0; j < b.dim(); ++j) {
    for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = -b.basis_matrix()(j, r);
  }
  const Matrix ns = nullspace(m);
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < ns.rows(); ++k) {
    const Vector row = ns.row(k);
    Vector s(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    rows.push_back(a.embed(s));
  }
  return Subspace(n, rows);
}

Subspace orthogonal_complement(const Matrix& q, const Subspace& s_sub, const Subspace& within) {
  // x = within^T c, conditions s_i^T q within^T c = 0.
  const Matrix w = within.basis_matrix();
  Matrix conditions(s_sub.dim(), within.dim());
  for (std::size_t i = 0; i < s_sub.dim(); ++i) {
    const Vector qs = left_multiply(s_sub.basis_vector(i), q);
    for (std::size_t k = 0; k < within.dim(); ++k) conditions(i, k) = dot(qs, w.row(k));
  }
  const Matrix ns = nullspace(conditions);
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < ns.rows(); ++k) rows.push_back(within.embed(ns.row(k)));
  return Subspace(within.ambient(), rows);
}

Subspace image(const Matrix& a, const Subspace& domain) {
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < domain.dim(); ++k) rows.push_back(a * domain.basis_vector(k));
  return Subspace(a.rows(), rows);
}

Subspace kernel(const Matrix& a) { return Subspace(a.cols(), nullspace(a).row_vectors()); }

DirectSum::DirectSum(std::vector<Subspace> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorKind::InvalidArgument, "direct sum needs at least one part");
  const std::size_t n = parts_.front().ambient();
  std::vector<Vector> rows;
  std::size_t offset = 0;
  for (const auto& p : parts_) {
    offsets_.push_back(offset);
    offset += p.dim();
    for (auto& v : p.basis()) rows.push_back(std::move(v));
  }
  total_ = Subspace(n, rows);
  if (total_.dim() != offset) throw Error(ErrorKind::InvalidArgument, "subspaces are not independent");
  // Columns of C: coordinates of each combined basis vector in total_.
  Matrix c(offset, offset);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const Vector coords = total_.coordinates(rows[j]);
    for (std::size_t i = 0; i < offset; ++i) c(i, j) = coords[i];
  }
  solver_ = inverse(c);
}

Vector DirectSum::component_coordinates(const Vector& v, std::size_t k) const {
  const Vector all = solver_ * total_.coordinates(v);
  return Vector(all.begin() + static_cast<std::ptrdiff_t>(offsets_[k]),
                all.begin() + static_cast<std::ptrdiff_t>(offsets_[k] + parts_[k].dim()));
}

Vector DirectSum::component(const Vector& v, std::size_t k) const {
  return parts_[k].embed(component_coordinates(v, k));
}

}  // namespace gorbit
