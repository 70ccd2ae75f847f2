#pragma once

#include "resq/errors.hpp"
#include "resq/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace resq {

/**
 * Dense univariate polynomial over an exact coefficient ring.
 *
 * Coefficients are stored in ascending order: coeffs()[i] is the coefficient
 * of x^i. The representation is canonical: the last stored coefficient is
 * nonzero, and the zero polynomial stores nothing and has no degree.
 */
template <typename T>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }

    static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

    /// c * x^k
    static Polynomial monomial(T c, std::size_t k) {
        std::vector<T> coeffs(k + 1);
        coeffs[k] = std::move(c);
        return Polynomial(std::move(coeffs));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    std::span<const T> coeffs() const { return coeffs_; }

    /// Coefficient of x^i; zero past the degree.
    T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

    /// Requires a nonzero polynomial.
    const T& leading() const { return coeffs_.back(); }

    bool operator==(const Polynomial& other) const = default;

    Polynomial operator-() const {
        std::vector<T> out(coeffs_.begin(), coeffs_.end());
        for (T& c : out) c = -c;
        return Polynomial(std::move(out));
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
        const std::size_t len = std::max(f.coeffs_.size(), g.coeffs_.size());
        std::vector<T> out(len);
        for (std::size_t i = 0; i < len; ++i) out[i] = f.coeff(i) + g.coeff(i);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
        const std::size_t len = std::max(f.coeffs_.size(), g.coeffs_.size());
        std::vector<T> out(len);
        for (std::size_t i = 0; i < len; ++i) out[i] = f.coeff(i) - g.coeff(i);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        if (f.is_zero() || g.is_zero()) return {};
        std::vector<T> out(f.coeffs_.size() + g.coeffs_.size() - 1);
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
            if (f.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const T& c, const Polynomial& f) {
        std::vector<T> out(f.coeffs_.begin(), f.coeffs_.end());
        for (T& a : out) a *= c;
        return Polynomial(std::move(out));
    }

    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
    Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

    /// Multiplication by x^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<T> out(k);
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(out));
    }

    /// Exact evaluation by Horner's rule.
    T operator()(const T& x) const {
        T acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        if constexpr (std::is_same_v<T, Rational>) {
            for (Rational& c : coeffs_) c.canonicalize();
        }
    }

    std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// Degree of a polynomial known to be nonzero; throws DomainError otherwise.
template <typename T>
std::size_t degree_of(const Polynomial<T>& f, const char* what = "polynomial") {
    if (f.is_zero()) throw DomainError(std::string(what) + " must be nonzero");
    return *f.degree();
}

IntPolynomial pow(const IntPolynomial& f, std::uint64_t exponent);

/// f(x^p) for p >= 1.
IntPolynomial substitute_power(const IntPolynomial& f, std::uint64_t p);

RatPolynomial to_rational(const IntPolynomial& f);

/// Integer polynomial if every coefficient is integral.
std::optional<IntPolynomial> to_integer(const RatPolynomial& f);

/// Clears denominators: returns (d, F) with d > 0 minimal and F = d·f integral.
std::pair<Integer, IntPolynomial> clear_denominators(const RatPolynomial& f);

struct RatDivRem {
    RatPolynomial quotient;
    RatPolynomial remainder;
};

/// Exact Euclidean division over Q: num = quotient·den + remainder with
/// deg(remainder) < deg(den). Throws DomainError on a zero divisor.
RatDivRem rat_divrem(const RatPolynomial& num, const RatPolynomial& den);

/// num mod den over Z when den has leading coefficient ±1; stays in integers.
IntPolynomial int_rem_unit_leading(const IntPolynomial& num, const IntPolynomial& den);

/// f(x0) mod m, m >= 2, by Horner's rule with reduction at every step.
std::uint64_t poly_eval_mod(const IntPolynomial& f, const Integer& x0, std::uint64_t m);

/// Coefficients of f reduced into [0, m), ascending. The result may carry
/// trailing zeros (it is not a canonical polynomial).
std::vector<std::uint64_t> reduce_coeffs(const IntPolynomial& f, std::uint64_t m);

/// Horner evaluation of residues at x0 modulo m.
std::uint64_t eval_residues(std::span<const std::uint64_t> coeffs, std::uint64_t x0, std::uint64_t m);

}  // namespace resq
