#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gls {

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
using Scalar = mpq_class;

/// Dense coordinate vector over the rationals.
using Vector = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical decimal form: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

bool is_zero(const Vector& v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

// Elementwise helpers; sizes must agree.
void axpy(const Scalar& a, const Vector& x, Vector& y);  // y += a*x
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& a, const Vector& v);

std::size_t nonzero_count(const Vector& v);

}  // namespace gls
