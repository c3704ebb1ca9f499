#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "gorbit/error.hpp"
#include "gorbit/linalg.hpp"
#include "gorbit/polynomial.hpp"
#include "gorbit/rational.hpp"
#include "gorbit/subspace.hpp"

using namespace gorbit;

namespace {

Matrix m(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size(), c = rows.begin()->size();
  Matrix out(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long x : row) out(i, j++) = x;
    ++i;
  }
  return out;
}

// Leibniz expansion, used as an oracle for determinant().
Rational leibniz(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-0/5")), "0");
  EXPECT_EQ(to_string(parse_rational("+7")), "7");
  EXPECT_EQ(to_string(parse_rational("-12/8")), "-3/2");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"1/0", "", "a", "1/", "/2", "1/-2", "1.5", "1//2"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
  try {
    parse_rational("1/0");
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SchemaError);
  }
}

TEST(Linalg, RrefOfKnownMatrix) {
  const Echelon e = rref(m({{2, 4, 6}, {1, 2, 4}, {3, 6, 10}}));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(e.reduced, m({{1, 2, 0}, {0, 0, 1}}));
}

TEST(Linalg, NullspaceIsAnnihilated) {
  const Matrix a = m({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
  const Matrix ns = nullspace(a);
  EXPECT_EQ(ns.rows(), 2u);
  for (std::size_t k = 0; k < ns.rows(); ++k) EXPECT_TRUE(is_zero(a * ns.row(k)));
}

TEST(Linalg, SolveReturnsSolutionOrDualCertificate) {
  const Matrix a = m({{1, 1}, {2, 2}});
  const LinearSolution ok = solve(a, {Rational(3), Rational(6)});
  ASSERT_TRUE(ok.feasible());
  EXPECT_EQ(a * *ok.solution, (Vector{3, 6}));

  const LinearSolution bad = solve(a, {Rational(1), Rational(3)});
  ASSERT_FALSE(bad.feasible());
  EXPECT_LT(bad.rank_coefficients, bad.rank_augmented);
  EXPECT_TRUE(is_zero(left_multiply(bad.certificate, a)));
  EXPECT_EQ(dot(bad.certificate, {Rational(1), Rational(3)}), 1);
}

TEST(Linalg, DeterminantMatchesLeibnizExpansion) {
  const Matrix a = m({{2, -1, 0, 3}, {1, 4, 2, 0}, {0, 5, -3, 1}, {7, 0, 1, 1}});
  EXPECT_EQ(determinant(a), leibniz(a));
  EXPECT_EQ(determinant(m({{1, 2}, {2, 4}})), 0);
}

TEST(Linalg, InverseTimesMatrixIsIdentity) {
  const Matrix a = m({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  EXPECT_EQ(inverse(a) * a, Matrix::identity(3));
  EXPECT_THROW(inverse(m({{1, 2}, {2, 4}})), Error);
}

TEST(Linalg, InertiaCountsSigns) {
  const Inertia i = inertia(m({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(i.positive, 1u);
  EXPECT_EQ(i.negative, 1u);
  EXPECT_EQ(i.zero, 1u);
  EXPECT_TRUE(is_positive_definite(m({{2, -1}, {-1, 2}})));
  EXPECT_FALSE(is_positive_definite(m({{1, 2}, {2, 1}})));
  EXPECT_TRUE(is_negative_semidefinite(m({{-1, 1}, {1, -1}})));
  EXPECT_FALSE(is_negative_definite(m({{-1, 1}, {1, -1}})));
}

TEST(Polynomial, CharacteristicPolynomialAgreesWithDeterminant) {
  const Matrix a = m({{1, 2, 0}, {-1, 3, 4}, {2, 0, -2}});
  const Polynomial chi = characteristic_polynomial(a);
  ASSERT_EQ(chi.degree(), 3);
  for (long t = -3; t <= 3; ++t) {
    Matrix shifted = Rational(t) * Matrix::identity(3) - a;
    EXPECT_EQ(chi.evaluate(t), leibniz(shifted)) << t;
  }
}

TEST(Polynomial, RationalRootsWithMultiplicity) {
  // (t + 2)^2 (t + 4/3) (t - 5/7)
  const Polynomial p = Polynomial({2, 1}) * Polynomial({2, 1}) * Polynomial({Rational(4, 3), 1}) *
                       Polynomial({Rational(-5, 7), 1});
  const auto roots = rational_roots(p);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0].value, -2);
  EXPECT_EQ(roots[0].multiplicity, 2);
  EXPECT_EQ(roots[1].value, Rational(-4, 3));
  EXPECT_EQ(roots[1].multiplicity, 1);
  EXPECT_EQ(roots[2].value, Rational(5, 7));
}

TEST(Polynomial, IrrationalRootsAreNotReported) {
  const Polynomial p({-2, 0, 1});  // t^2 - 2
  EXPECT_TRUE(rational_roots(p).empty());
  const Polynomial q = Polynomial({1, 0, 1}) * Polynomial({-3, 1});  // (t^2 + 1)(t - 3)
  const auto roots = rational_roots(q);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0].value, 3);
}

TEST(Subspace, EchelonFormIsCanonical) {
  const Subspace a(3, {{1, 1, 0}, {0, 1, 1}});
  const Subspace b(3, {{1, 2, 1}, {2, 1, -1}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(Vector{1, 0, -1}));
  EXPECT_FALSE(a.contains(Vector{1, 0, 0}));
}

TEST(Subspace, CoordinatesAndEmbedAreInverse) {
  const Subspace s(4, {{1, 2, 0, 1}, {0, 0, 1, 3}});
  const Vector v = add(scale(s.basis_vector(0), 3), scale(s.basis_vector(1), Rational(-1, 2)));
  EXPECT_EQ(s.embed(s.coordinates(v)), v);
}

TEST(Subspace, DirectSumSplitsVectors) {
  const Subspace a(3, {{1, 0, 0}, {0, 1, 1}});
  const Subspace b(3, {{1, 1, 0}});
  const DirectSum d({a, b});
  const Vector v{2, 5, 7};
  EXPECT_EQ(add(d.component(v, 0), d.component(v, 1)), v);
  EXPECT_TRUE(a.contains(d.component(v, 0)));
  EXPECT_TRUE(b.contains(d.component(v, 1)));
}
