#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace freecalc {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p/q", "p" and an optional leading sign. The result is canonical.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Binomial coefficient; zero when k < 0 or k > n, and C(-1, -1) = 1 by the
// convention that the empty composition is counted once.
Integer binomial(long n, long k);

Rational power(const Rational& base, unsigned long exponent);

// Size caps for enumerations. The environment variable
// NC_FREECALC_CAP_OVERRIDE (a non-negative integer) raises every cap to at
// least that value.
std::size_t effective_cap(std::size_t default_cap);

// Throws CapExceeded with a message naming `what` when n > effective_cap(cap).
void check_cap(std::size_t n, std::size_t default_cap, std::string_view what);

} // namespace freecalc
