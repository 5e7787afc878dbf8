#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cubline {

// Exact rational scalar. mpq_class keeps the canonical form we rely on
// everywhere: gcd(|num|, den) = 1 and den >= 1, with sign on the numerator.
// Raw two-integer construction is only canonical after canonicalize(), so
// build values through rational() below.
using Rational = mpq_class;

Rational rational(long num, long den = 1);

// Accepts "p", "p/q", optional leading sign. Throws ParseError on anything else.
Rational rational_from_string(const std::string& text);

inline const mpz_class& numerator(const Rational& q) { return q.get_num(); }
inline const mpz_class& denominator(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q);  // "p" or "p/q"

}  // namespace cubline
