#pragma once

#include <stdexcept>
#include <string>

namespace gorbit {

enum class ErrorKind {
  SchemaError,
  JacobiViolation,
  DimensionMismatch,
  InternalInconsistency,
  NotASubalgebra,
  NotAnIdeal,
  IsotropyNotCompactType,
  ComplementNotInvariant,
  MetricNotInvariant,
  LeviNotInvariant,
  NotTwoStep,
  SpectrumNumeric,
  CliffordRelationViolation,
  Gonil2HypothesisFailed,
  NotNormalized,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// All library failures. `location` is a JSON pointer when the error can be
/// traced to a field of an input file, otherwise empty.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string location = {})
      : std::runtime_error(message), kind_(kind), location_(std::move(location)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorKind kind_;
  std::string location_;
};

}  // namespace gorbit
