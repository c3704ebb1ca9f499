#include "gorbit/lie_algebra.hpp"

#include <algorithm>

#include "gorbit/error.hpp"

namespace gorbit {

namespace {

std::string vector_text(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + "]";
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names, const StructureTable& table,
                       std::size_t dimension_cap)
    : name_(std::move(name)), basis_names_(std::move(basis_names)) {
  const std::size_t n = basis_names_.size();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "algebra dimension must be positive");
  if (n > dimension_cap) {
    throw Error(ErrorKind::DimensionMismatch,
                "dimension " + std::to_string(n) + " exceeds cap " + std::to_string(dimension_cap));
  }
  dense_.assign(n * n, zero_vector(n));
  for (const auto& [key, terms] : table) {
    const auto [i, j] = key;
    if (i >= j || j >= n) {
      throw Error(ErrorKind::DimensionMismatch,
                  "bracket index pair (" + std::to_string(i) + ", " + std::to_string(j) + ") invalid");
    }
    Vector v = zero_vector(n);
    for (const auto& t : terms) {
      if (t.k >= n) throw Error(ErrorKind::DimensionMismatch, "bracket term index out of range");
      v[t.k] += t.c;
    }
    if (gorbit::is_zero(v)) continue;
    std::vector<BracketTerm> canonical;
    for (std::size_t k = 0; k < n; ++k) {
      if (!gorbit::is_zero(v[k])) canonical.push_back({k, v[k]});
    }
    table_[key] = std::move(canonical);
    dense_[i * n + j] = v;
    dense_[j * n + i] = scale(v, -1);
  }
  ad_basis_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& b = dense_[i * n + j];
      for (std::size_t k = 0; k < n; ++k) m(k, j) = b[k];
    }
    ad_basis_.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r = jacobi_residual(*this, i, j, k);
        if (!gorbit::is_zero(r)) {
          throw Error(ErrorKind::JacobiViolation, "Jacobi identity fails on (" + std::to_string(i) + ", " +
                                                      std::to_string(j) + ", " + std::to_string(k) +
                                                      "), residual " + vector_text(r));
        }
      }
    }
  }
}

LieAlgebra LieAlgebra::from_table(std::string name, std::size_t dim, const StructureTable& table) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return LieAlgebra(std::move(name), std::move(names), table);
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  Vector out = zero_vector(n);
  for (const auto& [key, terms] : table_) {
    const auto [i, j] = key;
    Rational coeff = x[i] * y[j] - x[j] * y[i];
    if (gorbit::is_zero(coeff)) continue;
    for (const auto& t : terms) out[t.k] += coeff * t.c;
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (gorbit::is_zero(x[i])) continue;
    const Matrix& a = ad_basis_[i];
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!gorbit::is_zero(a(r, c))) m(r, c) += x[i] * a(r, c);
      }
    }
  }
  return m;
}

Vector jacobi_residual(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = g.dim();
  const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
  Vector r = g.bracket(g.basis_bracket(i, j), ek);
  r = add(r, g.bracket(g.basis_bracket(j, k), ei));
  r = add(r, g.bracket(g.basis_bracket(k, i), ej));
  return r;
}

}  // namespace gorbit
