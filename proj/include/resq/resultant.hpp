#pragma once

#include "resq/integer.hpp"
#include "resq/matrix.hpp"
#include "resq/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace resq {

// Sign convention throughout: R(f, g) = a_n^m * prod g(alpha_i) over the roots
// alpha_i of f, so R(x - a, x - b) = a - b and R(f, g) = (-1)^(nm) R(g, f).

enum class Engine { sylvester, remainder_matrix, euclidean };

std::string_view engine_name(Engine engine);
std::optional<Engine> engine_from_name(std::string_view name);

struct ResultantResult {
    Integer value;
    Engine engine;
    IntPolynomial f;
    IntPolynomial g;
    /// Set when either input is the zero polynomial; value is then 0.
    bool degenerate = false;
};

/// Dispatches to the chosen engine. A zero input is not an error here: the
/// result is 0 with `degenerate` set.
ResultantResult resultant(const IntPolynomial& f, const IntPolynomial& g, Engine engine);

/// (n+m)×(n+m) Sylvester matrix: m shifted rows of f above n shifted rows of
/// g, coefficients in descending degree.
IntMatrix sylvester_matrix(const IntPolynomial& f, const IntPolynomial& g);

/// det of the Sylvester matrix. Throws DomainError on a zero input.
Integer resultant_sylvester(const IntPolynomial& f, const IntPolynomial& g);

/**
 * The n×n matrix whose row i holds the coefficients, in descending degree,
 * of r_{n-1-i} = x^(n-1-i) g mod f.
 *
 * When f has leading coefficient ±1 the remainders are computed in integers
 * and `scale` is 1. Otherwise the remainders are rational; each row is
 * multiplied by the lcm of its denominators and `scale` is the product of
 * those multipliers, so det(rational matrix) = det(matrix) / scale.
 */
struct RemainderMatrix {
    IntMatrix matrix;
    Integer scale = 1;
};

/// Throws DomainError if either input is zero.
RemainderMatrix remainder_matrix(const IntPolynomial& f, const IntPolynomial& g);

/// a_n^m * det(remainder matrix). Throws DomainError on a zero input.
Integer resultant_remainder_matrix(const IntPolynomial& f, const IntPolynomial& g);

/// Euclidean reduction R(f, g) = a_n^(m-d) R(f, g mod f) alternated with the
/// swap rule, in exact rationals. Throws DomainError on a zero input.
Integer resultant_euclidean(const IntPolynomial& f, const IntPolynomial& g);

/// The same reduction over Q; both inputs nonzero.
Rational resultant_euclidean(const RatPolynomial& f, const RatPolynomial& g);

/// x^e mod f by square-and-multiply in Q[x]/(f). f nonzero.
RatPolynomial x_power_mod(std::uint64_t e, const IntPolynomial& f);

/**
 * R(f, x^e + sign) for sign = ±1, i.e. R(f, x^e - 1) for sign = -1 and
 * R(f, x^e + 1) for sign = +1, without building the (n+e)-square Sylvester
 * matrix: reduces x^e + sign modulo f to h of degree d and returns
 * a_n^(e-d) R(f, h).
 */
Integer cyclotomic_style_resultant(const IntPolynomial& f, std::uint64_t e, int sign);

}  // namespace resq
