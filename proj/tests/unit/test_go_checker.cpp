#include <gtest/gtest.h>

#include "corpus.hpp"
#include "gorbit/constructions.hpp"
#include "gorbit/error.hpp"
#include "gorbit/go_checker.hpp"
#include "gorbit/structure.hpp"

using namespace gorbit;
using gorbit::testing::algebra;

namespace {

Construction build(ConstructionKind kind) {
  ConstructionParams p;
  p.kind = kind;
  return construct(p);
}

// Reference LCG written out from the published constants.
std::vector<std::int64_t> lcg_oracle(std::uint64_t state, int bound, std::size_t count) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < count; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    out.push_back(static_cast<std::int64_t>((state >> 33) % static_cast<std::uint64_t>(2 * bound + 1)) - bound);
  }
  return out;
}

}  // namespace

TEST(Sampling, MatchesReferenceGenerator) {
  for (const std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xdeadbeefULL}) {
    for (const int bound : {1, 3, 10}) {
      SampleStream s(seed, bound);
      for (const auto expected : lcg_oracle(seed, bound, 50)) EXPECT_EQ(s.next_coordinate(), expected);
    }
  }
}

TEST(Sampling, FrozenValues) {
  SampleStream a(0, 10);
  std::vector<std::int64_t> got;
  for (int i = 0; i < 8; ++i) got.push_back(a.next_coordinate());
  EXPECT_EQ(got, (std::vector<std::int64_t>{-8, 5, 3, 6, 10, 4, 1, 10}));
  SampleStream b(42, 3);
  got.clear();
  for (int i = 0; i < 8; ++i) got.push_back(b.next_coordinate());
  EXPECT_EQ(got, (std::vector<std::int64_t>{-2, -1, -3, -1, -3, 2, 2, 3}));
}

TEST(Sampling, VectorsAreNonzero) {
  SampleStream s(7, 1);
  for (int i = 0; i < 200; ++i) EXPECT_FALSE(is_zero(s.next_vector(2)));
}

TEST(GoCheck, VerdictsOnConstructions) {
  EXPECT_EQ(go_check(build(ConstructionKind::U2Sphere).space).kind, GOVerdict::Kind::CertifiedNaturallyReductive);
  EXPECT_EQ(go_check(build(ConstructionKind::Sphere2).space).kind, GOVerdict::Kind::CertifiedNaturallyReductive);
  EXPECT_EQ(go_check(build(ConstructionKind::LedgerObata).space).kind,
            GOVerdict::Kind::CertifiedNaturallyReductive);
  EXPECT_EQ(go_check(build(ConstructionKind::EuclideanGo).space).kind, GOVerdict::Kind::SampledGO);
  EXPECT_EQ(go_check(build(ConstructionKind::Gonil2Extension).space).kind, GOVerdict::Kind::SampledGO);
}

TEST(GoCheck, GraphSolutionSatisfiesEquation) {
  const MetricReductiveSpace s = build(ConstructionKind::EuclideanGo).space;
  SampleStream stream(3, 5);
  for (int t = 0; t < 10; ++t) {
    const Vector x = stream.next_vector(s.dim_m());
    const GraphSolveResult r = geodesic_graph_solve(s, x);
    ASSERT_TRUE(r.solution.has_value());
    const Vector xz = add(s.from_m(r.solution->x), s.from_h(r.solution->z));
    for (std::size_t k = 0; k < s.dim_m(); ++k) {
      const Vector y = s.from_m(unit_vector(s.dim_m(), k));
      EXPECT_TRUE(is_zero(s.inner(s.m_part(s.g().bracket(xz, y)), x)));
    }
  }
}

TEST(GoCheck, FiliformWitnessRechecks) {
  const MetricReductiveSpace s = build(ConstructionKind::Filiform4).space;
  const GOVerdict v = go_check(s);
  ASSERT_EQ(v.kind, GOVerdict::Kind::NotGO);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(recheck_witness(s, *v.witness));
  EXPECT_LT(v.witness->rank_coefficients, v.witness->rank_augmented);
  // A corrupted certificate must not recheck.
  InfeasibilityWitness bad = *v.witness;
  bad.dual = scale(bad.dual, 2);
  EXPECT_FALSE(recheck_witness(s, bad));
}

TEST(GoCheck, NotGoOnComplexWeightControl) {
  EXPECT_EQ(go_check(build(ConstructionKind::ComplexWeightSolvable).space).kind, GOVerdict::Kind::NotGO);
}

TEST(GoCheck, SameSeedSameVerdict) {
  const MetricReductiveSpace s = build(ConstructionKind::Gonil2Extension).space;
  SampleConfig c;
  c.seed = 9;
  c.sample_count = 8;
  EXPECT_EQ(go_check(s, c).to_json().dump(), go_check(s, c).to_json().dump());
}

TEST(NilGo, HeisenbergIsGoAndFiliformIsRejected) {
  const LieAlgebra h3 = algebra("heisenberg3", 3, {{0, 1, 2, 1}});
  EXPECT_TRUE(nil_go_check(h3, Matrix::identity(3)).is_go());
  const LieAlgebra f4 = algebra("filiform4", 4, {{0, 1, 2, 1}, {0, 2, 3, 1}});
  EXPECT_THROW(nil_go_check(f4, Matrix::identity(4)), Error);
}

TEST(NilGo, TwoStepDataOfHeisenberg3) {
  const TwoStepNilpotent data(algebra("heisenberg3", 3, {{0, 1, 2, 1}}), Matrix::identity(3));
  EXPECT_EQ(data.nilpotency_class(), 2u);
  EXPECT_EQ(data.z().dim(), 1u);
  EXPECT_EQ(data.a().dim(), 2u);
  EXPECT_EQ(data.skew_derivations().size(), 1u);
  // ([Y, W], X) with X = e3, Y = e1: J e1 = e2.
  EXPECT_EQ(data.j_map(unit_vector(3, 2), unit_vector(3, 0)), unit_vector(3, 1));
}

TEST(NilGo, HTypeWithFourDimensionalCentreIsNotGo) {
  // Dropping one generator of the Cl(5) module gives an H-type algebra with
  // dim z = 4, dim a = 8, which is known not to be GO.
  CliffordModule module = clifford_module_cl5_r8();
  module.j.pop_back();
  module.z_dim = 4;
  verify_clifford(module);
  const LieAlgebra n = htype_algebra(module);
  const TwoStepNilpotent data(n, Matrix::identity(n.dim()));
  const GOVerdict v = nil_go_check(data);
  ASSERT_EQ(v.kind, GOVerdict::Kind::NotGO);
  ASSERT_TRUE(v.witness.has_value());
  const auto& w = *v.witness;
  ASSERT_EQ(w.vectors.size(), 2u);
  const LinearSolution sol = data.solve_pair(w.vectors[0], w.vectors[1]);
  EXPECT_FALSE(sol.feasible());
}

TEST(TotallyGeodesic, WholeTangentSpaceAndLine) {
  const MetricReductiveSpace s = build(ConstructionKind::Sphere2).space;
  const TotallyGeodesicReport all = totally_geodesic_check(s, s.m());
  EXPECT_TRUE(all.is_tg);
  const TotallyGeodesicReport line = totally_geodesic_check(s, Subspace(s.g().dim(), {s.m().basis_vector(0)}));
  EXPECT_TRUE(line.bracket_closed);
  EXPECT_TRUE(line.is_tg);
  EXPECT_THROW(totally_geodesic_check(s, s.h()), Error);
}

TEST(PrincipalIsotropy, U2PlaneHasTrivialStabilizer) {
  const MetricReductiveSpace s = build(ConstructionKind::U2Sphere).space;
  EXPECT_EQ(principal_isotropy_dim(s, Subspace(4, {unit_vector(4, 0), unit_vector(4, 1)})).dim, 0u);
}
