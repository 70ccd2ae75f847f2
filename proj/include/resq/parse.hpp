#pragma once

#include "resq/polynomial.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace resq {

/// Largest exponent accepted after `^`.
inline constexpr std::uint64_t kMaxExponent = 1'000'000;

/**
 * Parses a univariate polynomial in `x`.
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := unary ('*' unary)*
 *   unary   := ('+' | '-') unary | power
 *   power   := primary ('^' integer)?
 *   primary := integer | 'x' | '(' expr ')'
 *
 * Whitespace is insignificant. Juxtaposition (`3x`, `2(x+1)`) is rejected.
 * Throws ParseError carrying the offending character offset.
 */
IntPolynomial parse_poly(std::string_view text);

/// Canonical text: descending degree, explicit `*`, no zero terms, e.g.
/// `x^6 + 1`, `-3*x^2 + x - 7`. The zero polynomial prints as `0`.
std::string to_string(const IntPolynomial& f);

std::string to_string(const RatPolynomial& f);

}  // namespace resq
