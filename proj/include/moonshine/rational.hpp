#pragma once

// Exact integers and rationals. Both are GMP values; mpq_class keeps itself in
// lowest terms with a positive denominator after every arithmetic operation.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace moonshine {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms; den != 0.
Rational frac(std::int64_t num, std::int64_t den = 1);

/// Parses "p/q" or "p" (optional sign on p). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Always "p/q", also for integers ("5/1"), so the series format stays uniform.
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// Representative of value mod 1 in [0, 1).
Rational mod_one(const Rational& value);

bool is_integer(const Rational& value);

/// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer& value);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Non-negative remainder for positive modulus.
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

}  // namespace moonshine
