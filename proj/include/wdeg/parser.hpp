#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "wdeg/polynomial.hpp"
#include "wdeg/upoly.hpp"

namespace wdeg {

/// Which identifiers an expression may use: `prefix`1 .. `prefix``count`
/// (indices 0..count-1), optionally followed by a lone `y` at index count.
struct VariableScheme {
  std::string prefix = "x";
  std::size_t count = 0;
  bool with_y = false;

  std::size_t ring_size() const noexcept { return count + (with_y ? 1 : 0); }
};

/// Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*      divisor must be a nonzero constant
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | identifier | '(' expr ')'
/// Whitespace (including newlines) is ignored between tokens.  ParseError
/// carries the line and column of the offending token.
Polynomial parse_expression(std::string_view text, const VariableScheme& scheme);

/// Polynomial in x1..xn.
Polynomial parse_polynomial(std::string_view text, std::size_t n);

/// Element of k[x1..xn][y].
UPoly parse_upoly(std::string_view text, std::size_t n);

/// Element of k[z1..zr][y]: Phi written over coordinates standing for f_1..f_r.
UPoly parse_upoly_over_z(std::string_view text, std::size_t r);

}  // namespace wdeg
