#include "resq/polynomial.hpp"

namespace resq {

IntPolynomial pow(const IntPolynomial& f, std::uint64_t exponent) {
    IntPolynomial result = IntPolynomial::constant(1);
    IntPolynomial base = f;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

IntPolynomial substitute_power(const IntPolynomial& f, std::uint64_t p) {
    if (p == 0) throw DomainError("substitute_power requires p >= 1");
    if (f.is_zero()) return {};
    std::vector<Integer> out((f.coeffs().size() - 1) * p + 1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i * p] = f.coeffs()[i];
    return IntPolynomial(std::move(out));
}

RatPolynomial to_rational(const IntPolynomial& f) {
    std::vector<Rational> out;
    out.reserve(f.coeffs().size());
    for (const Integer& c : f.coeffs()) out.emplace_back(c);
    return RatPolynomial(std::move(out));
}

std::optional<IntPolynomial> to_integer(const RatPolynomial& f) {
    std::vector<Integer> out;
    out.reserve(f.coeffs().size());
    for (const Rational& c : f.coeffs()) {
        if (c.get_den() != 1) return std::nullopt;
        out.emplace_back(c.get_num());
    }
    return IntPolynomial(std::move(out));
}

std::pair<Integer, IntPolynomial> clear_denominators(const RatPolynomial& f) {
    Integer d = 1;
    for (const Rational& c : f.coeffs()) {
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<Integer> out;
    out.reserve(f.coeffs().size());
    for (const Rational& c : f.coeffs()) out.emplace_back(c.get_num() * (d / c.get_den()));
    return {d, IntPolynomial(std::move(out))};
}

RatDivRem rat_divrem(const RatPolynomial& num, const RatPolynomial& den) {
    if (den.is_zero()) throw DomainError("division by the zero polynomial");
    const std::size_t dn = *den.degree();
    if (num.is_zero() || *num.degree() < dn) return {RatPolynomial(), num};

    std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
    std::vector<Rational> quot(rem.size() - dn);
    const Rational& lead = den.leading();
    for (std::size_t top = rem.size(); top-- > dn;) {
        if (rem[top] == 0) continue;
        Rational factor = rem[top] / lead;
        const std::size_t shift = top - dn;
        quot[shift] = factor;
        for (std::size_t j = 0; j <= dn; ++j) rem[shift + j] -= factor * den.coeffs()[j];
    }
    rem.resize(dn);
    return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

IntPolynomial int_rem_unit_leading(const IntPolynomial& num, const IntPolynomial& den) {
    const std::size_t dn = degree_of(den, "divisor");
    const Integer& lead = den.leading();
    if (lead != 1 && lead != -1) throw DomainError("integer remainder requires a leading coefficient of +1 or -1");
    if (num.is_zero() || *num.degree() < dn) return num;

    std::vector<Integer> rem(num.coeffs().begin(), num.coeffs().end());
    for (std::size_t top = rem.size(); top-- > dn;) {
        if (rem[top] == 0) continue;
        Integer factor = rem[top] * lead;  // lead is its own inverse
        const std::size_t shift = top - dn;
        for (std::size_t j = 0; j <= dn; ++j) rem[shift + j] -= factor * den.coeffs()[j];
    }
    rem.resize(dn);
    return IntPolynomial(std::move(rem));
}

std::vector<std::uint64_t> reduce_coeffs(const IntPolynomial& f, std::uint64_t m) {
    std::vector<std::uint64_t> out;
    out.reserve(f.coeffs().size());
    for (const Integer& c : f.coeffs()) out.push_back(residue(c, m));
    return out;
}

std::uint64_t eval_residues(std::span<const std::uint64_t> coeffs, std::uint64_t x0, std::uint64_t m) {
    std::uint64_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = mul_mod(acc, x0, m) + *it;
        if (acc >= m) acc -= m;
    }
    return acc;
}

std::uint64_t poly_eval_mod(const IntPolynomial& f, const Integer& x0, std::uint64_t m) {
    if (m < 2) throw DomainError("modulus must be at least 2");
    const std::vector<std::uint64_t> coeffs = reduce_coeffs(f, m);
    return eval_residues(coeffs, residue(x0, m), m);
}

}  // namespace resq
