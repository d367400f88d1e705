#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wdeg {

// The coefficient field.  mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

// Accepts "p" or "p/q" with an optional leading sign.
Rational parse_rational(std::string_view text);

}  // namespace wdeg
