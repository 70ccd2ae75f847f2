#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace resq {

using Integer = mpz_class;
using Rational = mpq_class;

/// q-adic valuation. Zero has infinite valuation, so it satisfies every
/// divisibility bound.
class Valuation {
public:
    constexpr explicit Valuation(std::uint64_t exponent) : exponent_(exponent), infinite_(false) {}

    static constexpr Valuation infinite() { return Valuation(); }

    constexpr bool is_infinite() const { return infinite_; }
    /// Only meaningful when finite.
    constexpr std::uint64_t exponent() const { return exponent_; }

    /// True iff q^bound divides the underlying integer.
    constexpr bool at_least(std::uint64_t bound) const { return infinite_ || exponent_ >= bound; }

    constexpr bool operator==(const Valuation& other) const {
        return infinite_ == other.infinite_ && (infinite_ || exponent_ == other.exponent_);
    }
    constexpr std::strong_ordering operator<=>(const Valuation& other) const {
        if (infinite_ || other.infinite_) return infinite_ <=> other.infinite_;
        return exponent_ <=> other.exponent_;
    }

    /// "inf" or the decimal exponent.
    std::string to_string() const { return infinite_ ? "inf" : std::to_string(exponent_); }

private:
    constexpr Valuation() : exponent_(0), infinite_(true) {}

    std::uint64_t exponent_;
    bool infinite_;
};

/// Largest e with q^e | n; infinite for n = 0. Throws DomainError if q is not prime.
Valuation valuation(const Integer& n, std::uint64_t q);

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Throws DomainError naming `what` when q is not prime.
void require_prime(std::uint64_t q, const char* what = "modulus");

/// Throws DomainError unless q is an odd prime.
void require_odd_prime(std::uint64_t q, const char* what = "modulus");

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
/// Inverse of a modulo prime q; a must be nonzero mod q.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q);

/// Least non-negative residue of n modulo m (m >= 1).
std::uint64_t residue(const Integer& n, std::uint64_t m);

Integer pow(const Integer& base, std::uint64_t exponent);
Rational pow(const Rational& base, std::uint64_t exponent);

/// Least non-negative residue as an Integer; m > 0.
Integer mod_floor(const Integer& n, const Integer& m);

}  // namespace resq
