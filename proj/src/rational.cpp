#include "gorbit/rational.hpp"

#include <cctype>

#include "gorbit/error.hpp"

namespace gorbit {

namespace {

bool is_integer_text(std::string_view text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  std::string digits(text);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto numerator = text.substr(0, slash);
  if (!is_integer_text(numerator)) {
    throw Error(ErrorKind::SchemaError, "malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(numerator));

  const auto denominator = text.substr(slash + 1);
  if (!is_integer_text(denominator) || denominator[0] == '-' || denominator[0] == '+') {
    throw Error(ErrorKind::SchemaError, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(denominator);
  if (den == 0) {
    throw Error(ErrorKind::SchemaError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational value(parse_integer(numerator), den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v = zero_vector(n);
  v.at(index) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  Vector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Vector& v, const Rational& factor) {
  Vector out(v);
  for (auto& x : out) x *= factor;
  return out;
}

void axpy(Vector& a, const Rational& factor, const Vector& b) {
  if (is_zero(factor)) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(b[i])) a[i] += factor * b[i];
  }
}

Rational dot(const Vector& a, const Vector& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i]) && !is_zero(b[i])) sum += a[i] * b[i];
  }
  return sum;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::IsotropyNotCompactType: return "IsotropyNotCompactType";
    case ErrorKind::ComplementNotInvariant: return "ComplementNotInvariant";
    case ErrorKind::MetricNotInvariant: return "MetricNotInvariant";
    case ErrorKind::LeviNotInvariant: return "LeviNotInvariant";
    case ErrorKind::NotTwoStep: return "NotTwoStep";
    case ErrorKind::SpectrumNumeric: return "SpectrumNumeric";
    case ErrorKind::CliffordRelationViolation: return "CliffordRelationViolation";
    case ErrorKind::Gonil2HypothesisFailed: return "Gonil2HypothesisFailed";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace gorbit
