#include <gtest/gtest.h>

#include "gorbit/constructions.hpp"
#include "gorbit/error.hpp"
#include "gorbit/structure.hpp"

using namespace gorbit;

namespace {

ConstructionParams params(ConstructionKind kind) {
  ConstructionParams p;
  p.kind = kind;
  return p;
}

}  // namespace

TEST(Clifford, GeneratorsSatisfyRelations) {
  const CliffordModule m = clifford_module_cl5_r8();
  ASSERT_EQ(m.j.size(), 5u);
  const Matrix minus_one = Rational(-1) * Matrix::identity(8);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(m.j[i].transpose(), Rational(-1) * m.j[i]);
    EXPECT_EQ(m.j[i] * m.j[i], minus_one);
    for (std::size_t k = i + 1; k < 5; ++k) EXPECT_EQ(m.j[i] * m.j[k] + m.j[k] * m.j[i], Matrix(8, 8));
  }
  EXPECT_NO_THROW(verify_clifford(m));
}

TEST(Clifford, BrokenRelationIsNamed) {
  CliffordModule m = clifford_module_cl5_r8();
  m.j[1] = m.j[0];
  try {
    verify_clifford(m);
    FAIL() << "expected CliffordRelationViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CliffordRelationViolation);
    EXPECT_NE(std::string(e.what()).find("J_"), std::string::npos);
  }
}

TEST(HType, BracketMatchesCliffordPairing) {
  const CliffordModule m = clifford_module_cl5_r8();
  const LieAlgebra n = htype_algebra(m);
  ASSERT_EQ(n.dim(), 13u);
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const Vector xy = n.basis_bracket(x, y);
      for (std::size_t z = 0; z < 5; ++z) {
        const Rational expected = dot(m.j[z] * unit_vector(8, x), unit_vector(8, y));
        EXPECT_EQ(xy[8 + z], expected);
      }
      for (std::size_t k = 0; k < 8; ++k) EXPECT_TRUE(is_zero(xy[k]));
    }
}

TEST(HType, Heisenberg13Invariants) {
  const Construction c = construct(params(ConstructionKind::Heisenberg13));
  const LieAlgebra& n = c.space.g();
  EXPECT_EQ(n.dim(), 13u);
  EXPECT_EQ(center(n).dim(), 5u);
  ASSERT_TRUE(c.nil_metric.has_value());
  const TwoStepNilpotent data(n, *c.nil_metric);
  EXPECT_EQ(data.z().dim(), 5u);
  EXPECT_EQ(data.a().dim(), 8u);
  EXPECT_EQ(data.skew_derivations().size(), 11u);
  // Every basis element of D(n) is a metric-skew derivation.
  for (const auto& d : data.skew_derivations()) {
    EXPECT_EQ(d.transpose(), Rational(-1) * d);
    for (std::size_t i = 0; i < 13; ++i)
      for (std::size_t j = 0; j < 13; ++j) {
        const Vector ei = unit_vector(13, i), ej = unit_vector(13, j);
        EXPECT_EQ(d * n.bracket(ei, ej), add(n.bracket(d * ei, ej), n.bracket(ei, d * ej)));
      }
  }
}

TEST(HType, Heisenberg13SplitAndHypotheses) {
  const Construction c = construct(params(ConstructionKind::Heisenberg13));
  const TwoStepNilpotent data(c.space.g(), *c.nil_metric);
  const DerivationSplit split = split_derivations(data);
  EXPECT_EQ(split.d.size(), 10u);
  for (const auto& d : data.skew_derivations()) EXPECT_TRUE(commutator(split.c, d).is_zero());
  SampleConfig cfg;
  cfg.sample_count = 16;
  const Gonil2Hypotheses h = check_gonil2_hypotheses(data, split, cfg);
  EXPECT_EQ(h.hypothesis1_holds, h.samples);
  EXPECT_EQ(h.hypothesis2_holds, h.samples);
  EXPECT_FALSE(h.first_failure.has_value());
}

TEST(Gonil2, GoForSeveralScales) {
  for (const Rational scale : {Rational(1, 2), Rational(1), Rational(3)}) {
    ConstructionParams p = params(ConstructionKind::Gonil2Extension);
    p.c_scale = scale;
    p.samples.sample_count = 8;
    const Construction c = construct(p);
    EXPECT_EQ(c.space.g().dim(), 24u);
    EXPECT_EQ(c.space.dim_m(), 14u);
    SampleConfig cfg;
    cfg.sample_count = 8;
    EXPECT_TRUE(go_check(c.space, cfg).is_go()) << scale.get_str();
  }
  ConstructionParams bad = params(ConstructionKind::Gonil2Extension);
  bad.c_scale = 0;
  EXPECT_THROW(construct(bad), Error);
}

TEST(LedgerObata, VariantsGiveDifferentComplements) {
  ConstructionParams a = params(ConstructionKind::LedgerObata);
  ConstructionParams b = a;
  b.variant = "ideal";
  const Construction ca = construct(a), cb = construct(b);
  EXPECT_EQ(ca.space.g().dim(), 9u);
  EXPECT_EQ(ca.space.h(), cb.space.h());
  EXPECT_NE(ca.space.m(), cb.space.m());
  EXPECT_EQ(go_check(ca.space).kind, GOVerdict::Kind::CertifiedNaturallyReductive);
  b.variant = "nonsense";
  EXPECT_THROW(construct(b), Error);
}

TEST(Constructions, EveryKindBuildsAndRoundTripsName) {
  for (const auto kind : all_construction_kinds()) {
    EXPECT_EQ(parse_construction_kind(to_string(kind)), kind);
    ConstructionParams p = params(kind);
    p.samples.sample_count = 4;
    EXPECT_NO_THROW(construct(p)) << to_string(kind);
  }
  EXPECT_FALSE(parse_construction_kind("klein_bottle").has_value());
}

TEST(Constructions, EuclideanGoShape) {
  for (const std::size_t n : {2u, 3u}) {
    ConstructionParams p = params(ConstructionKind::EuclideanGo);
    p.n = n;
    const Construction c = construct(p);
    // R^{2n} x| (u(1) + su(n)), with m = R^{2n} + the u(1) direction.
    EXPECT_EQ(c.space.g().dim(), 2 * n + n * n);
    EXPECT_EQ(c.space.dim_m(), 2 * n + 1);
  }
}

TEST(Constructions, IsometryExtensionOfHeisenberg3) {
  const Construction c = construct(params(ConstructionKind::Heisenberg3));
  const MetricReductiveSpace ext = isometry_extension(c.space.g(), *c.nil_metric);
  EXPECT_EQ(ext.dim_m(), 3u);
  EXPECT_EQ(ext.dim_h(), 1u);
  EXPECT_TRUE(go_check(ext).is_go());
  // The h = 0 presentation alone is not GO.
  EXPECT_FALSE(go_check(c.space).is_go());
}
