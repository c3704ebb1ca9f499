#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gorbit {

/// Exact rational scalar. GMP keeps every value in canonical form
/// (reduced, positive denominator) after each arithmetic operation.
using Rational = mpq_class;

using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws gorbit::Error (SchemaError) on a zero
/// denominator or malformed text.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Vector& v, const Rational& factor);
/// a += factor * b
void axpy(Vector& a, const Rational& factor, const Vector& b);
Rational dot(const Vector& a, const Vector& b);

}  // namespace gorbit
