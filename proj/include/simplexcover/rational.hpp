#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace simplexcover {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/q", or a finite decimal such as "-0.125".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
double to_double(const Rational& value);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational exact_from_double(double value);

/// Best rational approximation by continued-fraction truncation whose
/// denominator does not exceed `max_denominator`.
Rational rationalize(double value, std::int64_t max_denominator);

/// Rational with the smallest denominator (then numerator) in [lo, hi], lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);
BigInt round_nearest(const Rational& value);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);
Rational power(const Rational& base, unsigned exponent);

/// Exact nonnegative n-th root when both numerator and denominator are
/// perfect n-th powers.
std::optional<Rational> exact_root(const Rational& value, unsigned degree);

/// Decimal rendering. Terminating expansions (denominator 2^a 5^b) are
/// printed exactly; everything else is rounded to `digits` fractional digits.
std::string to_decimal(const Rational& value, unsigned digits = 20);

bool fits_int64(const BigInt& value);

}  // namespace simplexcover
