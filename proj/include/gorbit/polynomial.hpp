#pragma once

#include <vector>

#include "gorbit/linalg.hpp"
#include "gorbit/rational.hpp"

namespace gorbit {

/// Univariate polynomial, coefficients stored lowest degree first with no
/// trailing zeros. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t k) const;
  Rational leading() const;
  Rational evaluate(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};
DivisionResult divide(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial square_free_part(const Polynomial& p);

/// det(t I - a), by the Faddeev-LeVerrier recursion.
Polynomial characteristic_polynomial(const Matrix& a);

struct RationalRoot {
  Rational value;
  int multiplicity = 0;
};

/// All rational roots in increasing order, with multiplicities. Candidates
/// come from floating-point roots of the square-free part and are confirmed
/// by exact evaluation.
std::vector<RationalRoot> rational_roots(const Polynomial& p);

/// Floating-point roots (real and complex) of a nonzero polynomial.
struct ComplexRoot {
  double real = 0;
  double imag = 0;
};
std::vector<ComplexRoot> numeric_roots(const Polynomial& p);

}  // namespace gorbit
