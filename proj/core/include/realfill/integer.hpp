#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace realfill {

/// Arbitrary-precision integer used for every matrix entry and class coordinate.
using Integer = mpz_class;

int sign(const Integer& x);
Integer abs(const Integer& x);
Integer gcd(const Integer& a, const Integer& b);

/// Floor of the exact quotient a / b. b must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);
/// Quotient rounded toward zero. b must be nonzero.
Integer trunc_div(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& n);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
/// The square root of n when n is a perfect square.
std::optional<Integer> exact_sqrt(const Integer& n);

/// Nonnegative residue of x modulo m (m > 0).
long mod_positive(const Integer& x, long m);

std::string to_string(const Integer& x);

/// Parses an optionally signed decimal integer; surrounding whitespace is
/// accepted. Throws std::invalid_argument on anything else.
Integer parse_integer(std::string_view text);

}  // namespace realfill
