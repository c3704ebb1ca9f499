#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorbit/go_checker.hpp"
#include "gorbit/homspace.hpp"

namespace gorbit {

/// m skew endomorphisms J_i of Q^n with J_i^2 = -1 and J_i J_j = -J_j J_i.
struct CliffordModule {
  std::size_t z_dim = 0;
  std::size_t a_dim = 0;
  std::vector<Matrix> j;
};

/// Throws CliffordRelationViolation naming the failing relation.
void verify_clifford(const CliffordModule& module);

/// Five 8x8 integer matrices built as triple Kronecker products of
/// I, E = [[0,-1],[1,0]], X = [[0,1],[1,0]], Z = [[1,0],[0,-1]]:
/// IIE, IEX, EIZ, EXX, EZX.
CliffordModule clifford_module_cl5_r8();

/// Two-step algebra on a + z with ([X,Y], Z) = (J_Z X, Y) for the Euclidean
/// inner products.
LieAlgebra htype_algebra(const CliffordModule& module, std::string name = "htype");

/// n x| span(derivations): n's basis first, then one basis vector per
/// derivation. The derivations must span a Lie algebra.
LieAlgebra semidirect_with_derivations(const LieAlgebra& n, const std::vector<Matrix>& derivations,
                                       const std::vector<std::string>& derivation_names, std::string name);

/// (n x| D(n)) / D(n) with m = n: the full isometry presentation of a
/// metric Lie algebra.
MetricReductiveSpace isometry_extension(const LieAlgebra& n, const Matrix& metric);

enum class ConstructionKind {
  U2Sphere,
  EuclideanGo,
  HType,
  Heisenberg13,
  Gonil2Extension,
  LedgerObata,
  Filiform4,
  ComplexWeightSolvable,
  Heisenberg3,
  Sphere2,
};

const char* to_string(ConstructionKind k);
std::optional<ConstructionKind> parse_construction_kind(const std::string& name);
std::vector<ConstructionKind> all_construction_kinds();

struct ConstructionParams {
  ConstructionKind kind = ConstructionKind::U2Sphere;
  Rational alpha = 2;                   ///< u2_sphere
  std::size_t n = 2;                    ///< euclidean_go
  std::optional<CliffordModule> clifford;  ///< htype
  Rational c_scale = 1;                 ///< gonil2_extension
  std::size_t copies = 3;               ///< ledger_obata
  std::string variant = "killing_orthogonal";  ///< ledger_obata: killing_orthogonal | ideal
  /// Complex weights (a, b) of the planes of complex_weight_solvable.
  std::vector<std::pair<Rational, Rational>> weights = {{1, 1}, {2, 2}};
  SampleConfig samples;                 ///< gonil2 hypothesis sampling
};

struct Construction {
  std::string label;
  MetricReductiveSpace space;
  std::optional<Subspace> levi;
  /// Metric on the whole algebra for kinds presented with h = 0.
  std::optional<Matrix> nil_metric;
};

Construction construct(const ConstructionParams& params);

/// Outcome of the two hypotheses of the solvable extension at each sample.
struct Gonil2Hypotheses {
  std::size_t samples = 0;
  std::size_t hypothesis1_holds = 0;  ///< D1 in d with D1 X = 0, D1 Y = J_X Y
  std::size_t hypothesis2_holds = 0;  ///< stabiliser of (X, Y) not inside d
  std::size_t max_d1_solution_dim = 0;
  std::optional<std::pair<Vector, Vector>> first_failure;
};

/// Splits D(n) = c + d with c its one-dimensional centre and d = [D, D].
struct DerivationSplit {
  Matrix c;
  std::vector<Matrix> d;
};
DerivationSplit split_derivations(const TwoStepNilpotent& data);

Gonil2Hypotheses check_gonil2_hypotheses(const TwoStepNilpotent& data, const DerivationSplit& split,
                                         const SampleConfig& config);

}  // namespace gorbit
