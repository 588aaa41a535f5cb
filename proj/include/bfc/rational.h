#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bfc {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator) after every bfc operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q"; throws Error{"parse-error"} otherwise or on a zero
// denominator.
Rational parse_rational(std::string_view text);

}  // namespace bfc
