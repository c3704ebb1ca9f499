#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gorbit/homspace.hpp"
#include "gorbit/report.hpp"

namespace gorbit {

struct SampleConfig {
  std::size_t sample_count = 64;
  std::uint64_t seed = 0;
  int coordinate_bound = 10;
};

/// 64-bit LCG (Knuth's MMIX constants). Each coordinate is
/// ((state >> 33) mod (2b+1)) - b taken after one step.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, int bound) : state_(seed), bound_(bound) {}
  std::int64_t next_coordinate();
  /// Nonzero integer vector of length n.
  Vector next_vector(std::size_t n);

 private:
  std::uint64_t state_;
  int bound_;
};

struct GeodesicGraphSolution {
  Vector x;  ///< m-coordinates
  Vector z;  ///< h-coordinates
};

/// Proof that ([X+Z,Y]_m, X) = 0 for all Y has no solution Z: rank L <
/// rank [L|c] and dual^T L = 0, dual^T c = 1.
struct InfeasibilityWitness {
  std::vector<Vector> vectors;  ///< the direction(s) in coordinates of g
  std::size_t rank_coefficients = 0;
  std::size_t rank_augmented = 0;
  Vector dual;
  std::size_t sample_index = 0;
};

struct GraphSolveResult {
  std::optional<GeodesicGraphSolution> solution;
  std::optional<InfeasibilityWitness> witness;
};

GraphSolveResult geodesic_graph_solve(const MetricReductiveSpace& space, const Vector& x_c);
bool natural_reductivity_check(const MetricReductiveSpace& space);

/// Rebuilds the system for a witness directly from g's brackets and checks
/// the dual certificate.
bool recheck_witness(const MetricReductiveSpace& space, const InfeasibilityWitness& witness);

struct GOVerdict {
  enum class Kind { CertifiedNaturallyReductive, SampledGO, NotGO };
  Kind kind = Kind::SampledGO;
  std::size_t sample_count = 0;      ///< random directions requested
  std::size_t directions_checked = 0;
  std::uint64_t seed = 0;
  std::optional<InfeasibilityWitness> witness;
  std::vector<std::string> notes;

  bool is_go() const { return kind != Kind::NotGO; }
  Json to_json() const;
};

const char* to_string(GOVerdict::Kind k);

/// Natural reductivity first; otherwise basis vectors, pairwise sums and
/// config.sample_count random directions, stopping at the first witness.
GOVerdict go_check(const MetricReductiveSpace& space, const SampleConfig& config = {});

/// Data of a two-step nilpotent metric algebra for the derivation test.
class TwoStepNilpotent {
 public:
  /// Throws NotTwoStep when the class exceeds 2.
  TwoStepNilpotent(const LieAlgebra& n, Matrix metric);

  const LieAlgebra& algebra() const noexcept { return n_; }
  const Matrix& metric() const noexcept { return metric_; }
  std::size_t nilpotency_class() const noexcept { return class_; }
  const Subspace& z() const noexcept { return z_; }
  const Subspace& a() const noexcept { return a_; }
  const std::vector<Matrix>& skew_derivations() const noexcept { return derivations_; }

  /// J_X(Y) for X in z, Y in a: (J_X Y, W) = ([Y, W], X) for W in a.
  Vector j_map(const Vector& x, const Vector& y) const;
  /// Solve D X = 0, D Y = J_X Y over D(n); coefficients on the derivation basis.
  LinearSolution solve_pair(const Vector& x, const Vector& y) const;
  /// Solution space of D X = 0 and D Y = 0 as matrices.
  std::vector<Matrix> stabilizer(const Vector& x, const Vector& y) const;
  /// Basis pairs followed by config.sample_count random pairs.
  std::vector<std::pair<Vector, Vector>> sample_pairs(const SampleConfig& config) const;

 private:
  LieAlgebra n_;
  Matrix metric_;
  std::size_t class_ = 0;
  Subspace z_;
  Subspace a_;
  Matrix a_gram_inverse_;
  std::vector<Matrix> derivations_;
};

GOVerdict nil_go_check(const LieAlgebra& n, const Matrix& metric, const SampleConfig& config = {});
GOVerdict nil_go_check(const TwoStepNilpotent& data, const SampleConfig& config = {});

struct TotallyGeodesicReport {
  bool bracket_closed = false;  ///< [p,p] in h + p
  bool u_closed = false;        ///< U(p,p) in p
  bool is_tg = false;
  Subspace h_prime;             ///< smallest subalgebra of h containing [p,p]_h
  Subspace centralizer_h;       ///< C_h(p)
  bool induced_go_condition = false;  ///< h' + C_h(p) = h
};

TotallyGeodesicReport totally_geodesic_check(const MetricReductiveSpace& space, const Subspace& p);

struct PrincipalIsotropy {
  std::size_t dim = 0;
  Vector attained_at;  ///< coordinates in g
};

/// Minimum of dim C_h(X) over sampled X in p; an upper bound for the
/// principal isotropy dimension.
PrincipalIsotropy principal_isotropy_dim(const MetricReductiveSpace& space, const Subspace& p,
                                         const SampleConfig& config = {});

struct AuditOptions {
  bool enforce_precondition = true;
};

/// Throws SpectrumNumeric for numeric-mode spectra.
AuditReport eigenspace_bracket_audit(const MetricReductiveSpace& space, const KillingOperatorSpectrum& spectrum,
                                     const GOVerdict& verdict, const SampleConfig& config = {},
                                     const AuditOptions& options = {});

}  // namespace gorbit
