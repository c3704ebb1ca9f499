#include "gorbit/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "gorbit/error.hpp"

namespace gorbit {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && gorbit::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (coeffs_.empty()) return {};
  const Rational lead = coeffs_.back();
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coefficients().size() + b.coefficients().size() - 1);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients().size(); ++j) {
      c[i + j] += a.coefficients()[i] * b.coefficients()[j];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
  return Polynomial(std::move(c));
}

DivisionResult divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem(a.coefficients());
  const int db = b.degree();
  const int da = a.degree();
  std::vector<Rational> quo(da >= db ? static_cast<std::size_t>(da - db + 1) : 0);
  for (int k = da - db; k >= 0; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k + db)] / b.leading();
    quo[static_cast<std::size_t>(k)] = factor;
    if (is_zero(factor)) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= factor * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  const Polynomial g = gcd(p, p.derivative());
  return divide(p, g).quotient.monic();
}

Polynomial characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial of non-square matrix");
  // c[n] = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    const Matrix am = a * m;
    c[n - k] = -am.trace() / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

std::vector<ComplexRoot> numeric_roots(const Polynomial& p) {
  const int d = p.degree();
  std::vector<ComplexRoot> out;
  if (d <= 0) return out;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  const Rational lead = p.leading();
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) {
    companion(i, d - 1) = -to_double(p.coefficient(static_cast<std::size_t>(i)) / lead);
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const auto ev = solver.eigenvalues();
  for (int i = 0; i < d; ++i) out.push_back({ev(i).real(), ev(i).imag()});
  return out;
}

namespace {

// Continued-fraction convergents of x with denominators up to `bound`.
std::vector<Rational> convergents(double x, const mpz_class& bound) {
  std::vector<Rational> out;
  mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(rest);
    if (!std::isfinite(fl) || std::fabs(fl) > 1e15) break;
    const mpz_class a(fl);
    const mpz_class h = a * h0 + h1;
    const mpz_class k = a * k0 + k1;
    if (k > bound) break;
    out.emplace_back(h, k);
    out.back().canonicalize();
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    const double frac = rest - fl;
    if (std::fabs(frac) < 1e-14) break;
    rest = 1.0 / frac;
  }
  return out;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const Polynomial& p) {
  std::vector<RationalRoot> out;
  if (p.degree() <= 0) return out;
  Polynomial sf = square_free_part(p);
  // Scale to integer coefficients: every rational root has denominator
  // dividing the leading integer coefficient.
  mpz_class lcm_den = 1;
  for (const auto& c : sf.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  const mpz_class lead = abs(mpz_class(sf.leading() * lcm_den));

  std::vector<Rational> found;
  if (is_zero(sf.coefficient(0))) found.emplace_back(0);
  for (const auto& r : numeric_roots(sf)) {
    if (std::fabs(r.imag) > 1e-6 * std::max(1.0, std::fabs(r.real))) continue;
    const double tol = 1e-6 * std::max(1.0, std::fabs(r.real));
    for (const auto& candidate : convergents(r.real, lead)) {
      if (std::fabs(to_double(candidate) - r.real) > tol) continue;
      if (std::find(found.begin(), found.end(), candidate) != found.end()) break;
      if (is_zero(sf.evaluate(candidate))) {
        found.push_back(candidate);
        break;
      }
    }
  }
  std::sort(found.begin(), found.end());
  const Polynomial p_monic = p.monic();
  for (const auto& root : found) {
    int multiplicity = 0;
    Polynomial rest = p_monic;
    const Polynomial linear({-root, Rational(1)});
    while (true) {
      auto qr = divide(rest, linear);
      if (!qr.remainder.is_zero()) break;
      ++multiplicity;
      rest = qr.quotient;
    }
    out.push_back({root, multiplicity});
  }
  return out;
}

}  // namespace gorbit
