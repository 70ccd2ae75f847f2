#include "resq/resultant.hpp"

#include "resq/errors.hpp"

#include <array>
#include <string>
#include <utility>

namespace resq {

namespace {

constexpr std::array<std::pair<Engine, std::string_view>, 3> kEngineNames{{
    {Engine::sylvester, "sylvester"},
    {Engine::remainder_matrix, "remainder"},
    {Engine::euclidean, "euclid"},
}};

void require_nonzero(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant engines require nonzero polynomials");
}

bool has_unit_leading(const IntPolynomial& f) { return f.leading() == 1 || f.leading() == -1; }

Integer require_integral(const Rational& r, const char* engine) {
    if (r.get_den() != 1) {
        throw InternalError(std::string(engine) + " produced a non-integral resultant " + r.get_str());
    }
    return r.get_num();
}

}  // namespace

std::string_view engine_name(Engine engine) {
    for (const auto& [e, name] : kEngineNames) {
        if (e == engine) return name;
    }
    return "unknown";
}

std::optional<Engine> engine_from_name(std::string_view name) {
    for (const auto& [e, n] : kEngineNames) {
        if (n == name) return e;
    }
    return std::nullopt;
}

ResultantResult resultant(const IntPolynomial& f, const IntPolynomial& g, Engine engine) {
    ResultantResult out{0, engine, f, g, f.is_zero() || g.is_zero()};
    if (out.degenerate) return out;
    switch (engine) {
        case Engine::sylvester:
            out.value = resultant_sylvester(f, g);
            break;
        case Engine::remainder_matrix:
            out.value = resultant_remainder_matrix(f, g);
            break;
        case Engine::euclidean:
            out.value = resultant_euclidean(f, g);
            break;
    }
    return out;
}

IntMatrix sylvester_matrix(const IntPolynomial& f, const IntPolynomial& g) {
    const std::size_t n = degree_of(f);
    const std::size_t m = degree_of(g);
    IntMatrix s(n + m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k <= n; ++k) s(i, i + k) = f.coeffs()[n - k];
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= m; ++k) s(m + i, i + k) = g.coeffs()[m - k];
    }
    return s;
}

Integer resultant_sylvester(const IntPolynomial& f, const IntPolynomial& g) {
    require_nonzero(f, g);
    return det_exact(sylvester_matrix(f, g));
}

RemainderMatrix remainder_matrix(const IntPolynomial& f, const IntPolynomial& g) {
    require_nonzero(f, g);
    const std::size_t n = *f.degree();
    RemainderMatrix out{IntMatrix(n, n), 1};
    if (n == 0) return out;

    // Row i holds r_{n-1-i}; fill from the bottom with r_0 = g mod f and
    // r_{k+1} = x r_k mod f.
    auto store_row = [&](std::size_t row, const IntPolynomial& r) {
        for (std::size_t j = 0; j < n; ++j) out.matrix(row, j) = r.coeff(n - 1 - j);
    };

    if (has_unit_leading(f)) {
        IntPolynomial r = int_rem_unit_leading(g, f);
        for (std::size_t k = 0; k < n; ++k) {
            if (k > 0) r = int_rem_unit_leading(r.shifted(1), f);
            store_row(n - 1 - k, r);
        }
        return out;
    }

    const RatPolynomial fr = to_rational(f);
    RatPolynomial r = rat_divrem(to_rational(g), fr).remainder;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) r = rat_divrem(r.shifted(1), fr).remainder;
        auto [multiplier, lifted] = clear_denominators(r);
        store_row(n - 1 - k, lifted);
        out.scale *= multiplier;
    }
    return out;
}

Integer resultant_remainder_matrix(const IntPolynomial& f, const IntPolynomial& g) {
    const RemainderMatrix rm = remainder_matrix(f, g);
    const Integer numerator = pow(f.leading(), *g.degree()) * det_exact(rm.matrix);
    if (rm.scale == 1) return numerator;
    Rational value(numerator, rm.scale);
    value.canonicalize();
    return require_integral(value, "remainder-matrix engine");
}

Rational resultant_euclidean(const RatPolynomial& f_in, const RatPolynomial& g_in) {
    if (f_in.is_zero() || g_in.is_zero()) throw DomainError("resultant engines require nonzero polynomials");
    RatPolynomial f = f_in;
    RatPolynomial g = g_in;
    Rational acc = 1;
    for (;;) {
        const std::size_t n = *f.degree();
        const std::size_t m = *g.degree();
        if (n == 0) return acc * pow(f.leading(), m);
        if (m == 0) return acc * pow(g.leading(), n);
        if (m < n) {
            if ((n * m) % 2 == 1) acc = -acc;
            std::swap(f, g);
            continue;
        }
        RatPolynomial h = rat_divrem(g, f).remainder;
        if (h.is_zero()) return 0;
        acc *= pow(f.leading(), m - *h.degree());
        g = std::move(h);
    }
}

Integer resultant_euclidean(const IntPolynomial& f, const IntPolynomial& g) {
    require_nonzero(f, g);
    return require_integral(resultant_euclidean(to_rational(f), to_rational(g)), "euclidean engine");
}

RatPolynomial x_power_mod(std::uint64_t e, const IntPolynomial& f) {
    degree_of(f);
    const RatPolynomial modulus = to_rational(f);
    auto reduce = [&](const RatPolynomial& p) { return rat_divrem(p, modulus).remainder; };
    RatPolynomial result = reduce(RatPolynomial::constant(1));
    RatPolynomial base = reduce(RatPolynomial::monomial(1, 1));
    while (e != 0) {
        if (e & 1U) result = reduce(result * base);
        e >>= 1U;
        if (e != 0) base = reduce(base * base);
    }
    return result;
}

Integer cyclotomic_style_resultant(const IntPolynomial& f, std::uint64_t e, int sign) {
    if (f.is_zero()) throw DomainError("cyclotomic-style resultant requires a nonzero polynomial");
    if (e == 0) throw DomainError("exponent must be at least 1");
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    const std::size_t n = *f.degree();
    if (n == 0) return pow(f.leading(), e);

    RatPolynomial h;
    if (has_unit_leading(f)) {
        // x^e mod f stays integral; skip the rational path.
        IntPolynomial result = IntPolynomial::constant(1);
        IntPolynomial base = int_rem_unit_leading(IntPolynomial::monomial(1, 1), f);
        for (std::uint64_t k = e; k != 0;) {
            if (k & 1U) result = int_rem_unit_leading(result * base, f);
            k >>= 1U;
            if (k != 0) base = int_rem_unit_leading(base * base, f);
        }
        h = to_rational(int_rem_unit_leading(result + IntPolynomial::constant(sign), f));
    } else {
        h = rat_divrem(x_power_mod(e, f) + RatPolynomial::constant(sign), to_rational(f)).remainder;
    }
    if (h.is_zero()) return 0;
    const Rational reduced = resultant_euclidean(to_rational(f), h);
    return require_integral(reduced * Rational(pow(f.leading(), e - *h.degree())), "cyclotomic engine");
}

}  // namespace resq
