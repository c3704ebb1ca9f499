#include <gtest/gtest.h>

#include <memory>

#include "corpus.hpp"
#include "gorbit/constructions.hpp"
#include "gorbit/error.hpp"
#include "gorbit/homspace.hpp"
#include "gorbit/structure.hpp"

using namespace gorbit;
using gorbit::testing::algebra;

namespace {

const LieAlgebra& su2_plus_r() {
  static const LieAlgebra g = algebra("u2", 4, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 1, -1}});
  return g;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no gorbit::Error thrown";
  return ErrorKind::InternalInconsistency;
}

MetricReductiveSpace u2(const Rational& alpha) {
  ConstructionParams p;
  p.kind = ConstructionKind::U2Sphere;
  p.alpha = alpha;
  return construct(p).space;
}

// [x, y]_m computed from g's brackets and the h + m splitting.
Vector bracket_m_oracle(const MetricReductiveSpace& s, const Vector& x_c, const Vector& y_c) {
  return s.m_part(s.g().bracket(s.from_m(x_c), s.from_m(y_c)));
}

}  // namespace

TEST(Homspace, ValidationRejectsBadData) {
  const LieAlgebra& g = su2_plus_r();
  const Subspace h(4, {unit_vector(4, 2)});
  const Subspace m(4, {unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 3)});
  auto shared = std::make_shared<const LieAlgebra>(g);

  EXPECT_EQ(kind_of([&] { MetricReductiveSpace(shared, Subspace(4, {unit_vector(4, 0), unit_vector(4, 1)}),
                                               Subspace(4, {unit_vector(4, 2), unit_vector(4, 3)}),
                                               Matrix::identity(2)); }),
            ErrorKind::NotASubalgebra);
  EXPECT_EQ(kind_of([&] { MetricReductiveSpace(shared, Subspace(4, {unit_vector(4, 3)}),
                                               Subspace(4, {unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 2)}),
                                               Matrix::identity(3)); }),
            ErrorKind::IsotropyNotCompactType);
  EXPECT_EQ(kind_of([&] { MetricReductiveSpace(shared, h, Subspace(4, {unit_vector(4, 0), unit_vector(4, 1)}),
                                               Matrix::identity(2)); }),
            ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([&] { MetricReductiveSpace(shared, h,
                                               Subspace(4, {unit_vector(4, 0), Vector{0, 1, 1, 0}, unit_vector(4, 3)}),
                                               Matrix::identity(3)); }),
            ErrorKind::ComplementNotInvariant);
  Matrix skewed = Matrix::identity(3);
  skewed(0, 0) = 2;
  EXPECT_EQ(kind_of([&] { MetricReductiveSpace(shared, h, m, skewed); }), ErrorKind::MetricNotInvariant);
  EXPECT_EQ(kind_of([&] { MetricReductiveSpace(shared, h, m, Matrix::identity(2)); }), ErrorKind::DimensionMismatch);
  EXPECT_NO_THROW(MetricReductiveSpace(shared, h, m, Matrix::identity(3)));
}

TEST(Homspace, KillingMultipleNeedsDefiniteForm) {
  const LieAlgebra g = algebra("so3", 3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 1, -1}});
  const MetricReductiveSpace s = build_reductive(g, Subspace(3, {unit_vector(3, 2)}), MetricSpec::killing_multiple(3),
                                                 ComplementSpec{});
  EXPECT_EQ(s.ip(), Rational(6) * Matrix::identity(2));
  EXPECT_THROW(build_reductive(g, Subspace(3, {unit_vector(3, 2)}), MetricSpec::killing_multiple(0), ComplementSpec{}),
               Error);
}

TEST(Homspace, KillingOrthogonalComplementIsOrthogonal) {
  const LieAlgebra& g = su2_plus_r();
  const Subspace h(4, {Vector{0, 0, 1, 1}});
  const MetricReductiveSpace s =
      build_reductive(g, h, MetricSpec::explicit_matrix(Matrix::identity(3)), ComplementSpec{});
  const Matrix b = killing_form(g);
  for (const auto& x : s.m().basis()) EXPECT_TRUE(is_zero(bilinear(b, x, Vector{0, 0, 1, 1})));
  // e4 is Killing-orthogonal to everything, so it sits in m.
  EXPECT_TRUE(s.m().contains(unit_vector(4, 3)));
}

TEST(Homspace, UMapSatisfiesDefiningIdentity) {
  for (const Rational alpha : {Rational(1, 2), Rational(1), Rational(5)}) {
    const MetricReductiveSpace s = u2(alpha);
    const std::size_t d = s.dim_m();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Vector x = unit_vector(d, i), y = unit_vector(d, j);
        const Vector u = u_map(s, x, y);
        EXPECT_EQ(u, u_map(s, y, x));
        for (std::size_t k = 0; k < d; ++k) {
          const Vector z = unit_vector(d, k);
          const Rational lhs = 2 * s.inner(u, z);
          const Rational rhs = s.inner(bracket_m_oracle(s, z, x), y) + s.inner(x, bracket_m_oracle(s, z, y));
          EXPECT_EQ(lhs, rhs);
        }
        EXPECT_EQ(nabla_at_origin(s, x, y), add(scale(bracket_m_oracle(s, x, y), Rational(-1, 2)), u));
      }
  }
}

TEST(Homspace, UVanishesForNormalHomogeneousMetric) {
  const LieAlgebra g = algebra("so3", 3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 1, -1}});
  const MetricReductiveSpace s =
      build_reductive(g, Subspace(3, {unit_vector(3, 2)}), MetricSpec::killing_multiple(1), ComplementSpec{});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_TRUE(is_zero(u_map(s, unit_vector(2, i), unit_vector(2, j))));
}

// Hand computation: B = -2 on su(2), 0 on the centre. m = span{e1, e2, v} with
// v = (0, 0, alpha, -1) up to scale; A is -2 on e1, e2 and
// B(v,v)/|v|^2 = -2 alpha^2 / (alpha^2 + alpha) on v.
TEST(Homspace, U2SpectrumMatchesHandComputation) {
  for (const Rational alpha : {Rational(1, 2), Rational(1), Rational(2), Rational(5)}) {
    const KillingOperatorSpectrum sp = killing_operator_decomposition(u2(alpha));
    ASSERT_EQ(sp.mode, KillingOperatorSpectrum::Mode::Exact);
    const Rational third = Rational(-2) * alpha / (alpha + 1);
    ASSERT_EQ(sp.eigenvalues.size(), 2u) << alpha.get_str();
    EXPECT_EQ(sp.eigenvalues[0], -2);
    EXPECT_EQ(sp.eigenvalues[1], third);
    EXPECT_EQ(sp.eigenspaces[0], Subspace(4, {unit_vector(4, 0), unit_vector(4, 1)}));
    EXPECT_EQ(sp.eigenspaces[1], Subspace(4, {Vector{0, 0, alpha, -1}}));
  }
}

TEST(Homspace, SubmodulesAreOrthogonalAndSpanM) {
  for (const auto kind : {ConstructionKind::U2Sphere, ConstructionKind::LedgerObata, ConstructionKind::Sphere2}) {
    ConstructionParams p;
    p.kind = kind;
    const MetricReductiveSpace s = construct(p).space;
    const auto modules = submodule_decomposition(s);
    Subspace total(s.g().dim());
    std::size_t dims = 0;
    for (std::size_t a = 0; a < modules.size(); ++a) {
      total = total + modules[a].space;
      dims += modules[a].space.dim();
      EXPECT_TRUE(modules[a].space.contains(bracket_space(s.g(), s.h(), modules[a].space)));
      for (std::size_t b = a + 1; b < modules.size(); ++b)
        for (const auto& x : modules[a].space.basis())
          for (const auto& y : modules[b].space.basis()) EXPECT_TRUE(is_zero(s.inner(s.m_part(x), s.m_part(y))));
    }
    EXPECT_EQ(total, s.m()) << to_string(kind);
    EXPECT_EQ(dims, s.dim_m());
  }
}

TEST(Homspace, NormalizerStructuresOnU2) {
  const NormalizerStructures ns = normalizer_structures(u2(2));
  EXPECT_TRUE(ns.split_is_direct);
  EXPECT_TRUE(ns.normalizer_matches);
  EXPECT_EQ(ns.h_m.dim(), 2u);
}

TEST(Homspace, IsotropyLeviSplitRejectsNonLevi) {
  const MetricReductiveSpace s = u2(2);
  EXPECT_THROW(isotropy_levi_split(s, Subspace(4, {unit_vector(4, 0), unit_vector(4, 3)})), Error);
  const IsotropySplit split =
      isotropy_levi_split(s, Subspace(4, {unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 2)}));
  EXPECT_TRUE(split.failed_checks.empty());
}
