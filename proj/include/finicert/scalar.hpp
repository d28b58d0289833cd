#pragma once

#include <gmpxx.h>

#include <string>

namespace finicert {

/// Exact rational scalar. GMP keeps the canonical form we rely on:
/// lowest terms, denominator > 0, zero stored as 0/1. Every entry point
/// that ingests raw numerator/denominator pairs canonicalizes; arithmetic
/// on canonical operands stays canonical.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws InputError if den == 0.
Scalar make_scalar(long num, long den = 1);
Scalar make_scalar(const Integer& num, const Integer& den);

/// Parses "a" or "a/b" (optional leading sign on a). Throws InputError.
Scalar parse_scalar(const std::string& text);

/// Prints "a" or "a/b"; whole numbers omit the denominator.
std::string scalar_to_string(const Scalar& s);

Scalar scalar_pow(const Scalar& base, unsigned long exponent);

inline bool scalar_is_zero(const Scalar& s) { return sgn(s) == 0; }

} // namespace finicert
