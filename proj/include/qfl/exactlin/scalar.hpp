#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qfl::exactlin {

// Canonical rational: gcd(|p|, q) = 1, q > 0, zero is 0/1.
using Scalar = mpq_class;
using Integer = mpz_class;

// Dense rational vector. Lie algebra elements and cochain coordinates.
using Vector = std::vector<Scalar>;

/// "p/q", or "p" when q = 1. Sign on the numerator.
std::string to_string(const Scalar& x);

/// Inverse of to_string. Accepts "p", "-p", "p/q" with optional surrounding
/// blanks; the result is canonicalized. Throws InputError on anything else.
Scalar parse_scalar(std::string_view text);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

}  // namespace qfl::exactlin
