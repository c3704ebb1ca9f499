#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorbit/homspace.hpp"
#include "gorbit/lie_algebra.hpp"
#include "gorbit/report.hpp"

namespace gorbit {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kAlgebraFormat = "gorbit.algebra.v1";
inline constexpr const char* kReportFormat = "gorbit.report.v1";

struct ComplementFileSpec {
  ComplementStrategy strategy = ComplementStrategy::KillingOrthogonal;
  std::optional<std::vector<Vector>> levi;
  std::optional<std::vector<Vector>> m;     ///< explicit strategy
  std::optional<Matrix> form;               ///< form_orthogonal strategy
};

/// In-memory image of an algebra file. Rationals are exact throughout.
struct AlgebraFile {
  std::string name;
  std::size_t dimension = 0;
  std::vector<std::string> basis;
  StructureTable brackets;
  std::vector<Vector> isotropy;
  MetricSpec metric;
  std::optional<ComplementFileSpec> complement;
};

/// Throws SchemaError with a JSON path such as $.brackets[2].terms[0].c.
AlgebraFile parse_algebra_json(const Json& doc);
AlgebraFile parse_algebra_text(const std::string& text);
AlgebraFile read_algebra_file(const std::string& path);

Json to_json(const AlgebraFile& file);

/// Builds and validates g; Jacobi failures are reported at $.brackets.
LieAlgebra build_algebra(const AlgebraFile& file);
/// Builds the space; validation failures carry the path of the offending
/// field ($.isotropy, $.metric, $.complement).
MetricReductiveSpace build_space(const AlgebraFile& file);
std::optional<Subspace> levi_of(const AlgebraFile& file);

/// Explicit-complement file of an existing space, so that parsing it back
/// gives the same g, h, m and inner product.
AlgebraFile algebra_file_of(const MetricReductiveSpace& space, const std::optional<Subspace>& levi = std::nullopt);
/// Metric Lie algebra (h = 0, m = g) with the given Gram matrix.
AlgebraFile algebra_file_of(const LieAlgebra& g, const Matrix& metric);

/// List of coordinate vectors of the given length; SchemaError at `path`.
std::vector<Vector> vectors_at(const Json& v, const std::string& path, std::size_t length);

/// Sorted keys, no insignificant whitespace.
std::string canonical_dump(const Json& doc);
std::string sha256_hex(const std::string& bytes);

}  // namespace gorbit
