#include "oracles.hpp"

#include "resq/errors.hpp"
#include "resq/modular.hpp"
#include "resq/parse.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace resq;

namespace {

IntPolynomial P(const char* text) { return parse_poly(text); }

Residues oracle_common(const IntPolynomial& f, const IntPolynomial& g, unsigned long q) {
    const auto a = oracle::scan_roots(f, q);
    const auto b = oracle::scan_roots(g, q);
    Residues out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

TEST_CASE("identically zero mod q") {
    CHECK(is_identically_zero_mod(P("13*x^2+26"), 13));
    CHECK(is_identically_zero_mod(IntPolynomial(), 5));
    CHECK_FALSE(is_identically_zero_mod(P("13*x^2+27"), 13));
    // x^q - x vanishes at every point but is not the zero polynomial mod q.
    CHECK_FALSE(is_identically_zero_mod(P("x^5-x"), 5));
    CHECK_THROWS_AS(roots_mod(P("7*x"), 7), DomainError);
}

TEST_CASE("roots_mod fixtures") {
    CHECK(roots_mod(P("x^6+1"), 13) == Residues{2, 5, 6, 7, 8, 11});
    CHECK(roots_mod(P("(x+1)^6+1"), 13) == Residues{1, 4, 5, 6, 7, 10});
    CHECK(roots_mod(P("x^4-1"), 5) == Residues{1, 2, 3, 4});
    CHECK(roots_mod(P("x"), 7) == Residues{0});
    CHECK(roots_mod(P("x^2+1"), 7).empty());
    CHECK(roots_mod(P("x^5-x"), 5) == Residues{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(roots_mod(P("x"), 8), DomainError);
    CHECK_THROWS_AS(roots_mod(P("x"), 1'000'003), CapExceeded);
    CHECK_THROWS_AS(roots_mod(P("x"), 101, 100), CapExceeded);
}

TEST_CASE("roots_mod agrees with an exact scan") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 200; ++i) {
        const IntPolynomial f = oracle::random_poly(rng, 1, 6, 50);
        for (unsigned long q : {2UL, 3UL, 11UL, 31UL}) {
            if (is_identically_zero_mod(f, q)) continue;
            CHECK(roots_mod(f, q) == oracle::scan_roots(f, q));
        }
    }
}

TEST_CASE("common roots") {
    CHECK(common_roots(P("x^6+1"), P("(x+1)^6+1"), 13) == Residues{5, 6, 7});
    CHECK(common_roots(P("x^2+1"), P("x^2+2"), 5).empty());
    CHECK(common_roots(P("x^2-5*x+6"), P("(x-2)*(x-3)*(x+1)"), 7) == Residues{2, 3});
    std::mt19937_64 rng(73);
    for (int i = 0; i < 100; ++i) {
        const IntPolynomial f = oracle::random_poly(rng, 1, 5, 20);
        const IntPolynomial g = oracle::random_poly(rng, 1, 5, 20);
        if (is_identically_zero_mod(f, 7) || is_identically_zero_mod(g, 7)) continue;
        CHECK(common_roots(f, g, 7) == oracle_common(f, g, 7));
    }
}

TEST_CASE("analyze the worked example") {
    const ModAnalysis a = analyze(P("x^6+1"), P("(x+1)^6+1"), 13);
    CHECK(a.common_roots == Residues{5, 6, 7});
    CHECK(a.ell == 3);
    CHECK(a.n == 6);
    CHECK(a.m == 6);
    REQUIRE(a.rank_p.has_value());
    CHECK(*a.rank_p == 3);
    CHECK(a.resultant == 175760);
    CHECK(a.v_q == Valuation(3));
    CHECK(a.bound_theorem1);
    CHECK(a.bound_corollary1 == true);
    CHECK(a.ell_vs_rank == true);
}

TEST_CASE("analyze edge cases") {
    SUBCASE("no common roots") {
        const ModAnalysis a = analyze(P("x^2+1"), P("x^2+2"), 5);
        CHECK(a.ell == 0);
        CHECK(a.bound_theorem1);
    }
    SUBCASE("g = f gives a zero remainder matrix and R = 0") {
        const ModAnalysis a = analyze(P("x^2-1"), P("x^2-1"), 5);
        CHECK(a.resultant == 0);
        CHECK(a.v_q.is_infinite());
        CHECK(*a.rank_p == 0);
        CHECK(a.all_bounds_hold());
    }
    SUBCASE("q divides the leading coefficient of f") {
        const ModAnalysis a = analyze(P("5*x^2+x+1"), P("x+1"), 5);
        CHECK_FALSE(a.rank_p.has_value());
        CHECK_FALSE(a.bound_corollary1.has_value());
        CHECK(a.all_bounds_hold());
    }
    CHECK_THROWS_AS(analyze(P("13*x^2+26"), P("x"), 13), DomainError);
    CHECK_THROWS_AS(analyze(P("x"), P("x"), 9), DomainError);
}

TEST_CASE("analyze bounds hold on random pairs") {
    std::mt19937_64 rng(79);
    for (int i = 0; i < 300; ++i) {
        const IntPolynomial f = oracle::random_poly(rng, 1, 5, 9);
        const IntPolynomial g = oracle::random_poly(rng, 1, 5, 9);
        for (std::uint64_t q : {2, 3, 5, 7}) {
            if (is_identically_zero_mod(f, q) || is_identically_zero_mod(g, q)) continue;
            const ModAnalysis a = analyze(f, g, q, CheckMode::report);
            CHECK(a.ell == oracle_common(f, g, q).size());
            CHECK(a.all_bounds_hold());
        }
    }
}

TEST_CASE("quadratic residues match the square table") {
    for (std::uint64_t q : {3, 5, 7, 11, 13, 101}) {
        const std::vector<bool> table = oracle::square_table(q);
        CHECK_FALSE(is_quadratic_residue(0, q));
        for (std::uint64_t r = 1; r < q; ++r) CHECK(is_quadratic_residue(r, q) == table[r]);
    }
}

TEST_CASE("check_theorem2 fixtures") {
    const Theorem2Check golden = check_theorem2(P("x^2-x-1"), 11);
    CHECK(golden.roots == Residues{4, 8});
    CHECK(golden.ell == 2);
    CHECK(golden.resultant == -121);
    CHECK(golden.v_q == Valuation(2));
    CHECK(golden.report.holds);
    CHECK(golden.report.modulus_power == 2);

    const Theorem2Check none = check_theorem2(P("x^2+1"), 7);
    CHECK(none.ell == 0);
    CHECK(none.report.holds);

    const Theorem2Check vanishing = check_theorem2(P("x-1"), 5);
    CHECK(vanishing.resultant == 0);
    CHECK(vanishing.v_q.is_infinite());

    CHECK_THROWS_AS(check_theorem2(P("x^2+5*x"), 5), DomainError);
    CHECK_THROWS_AS(check_theorem2(P("x+1"), 2), DomainError);
}

TEST_CASE("check_theorem3 fixtures") {
    const Theorem3Check golden = check_theorem3(P("x^2-x-1"), 11);
    CHECK(golden.split.roots == Residues{4, 8});
    CHECK(golden.split.residue_roots == Residues{4});
    CHECK(golden.split.b == 1);
    CHECK(golden.r_minus == -11);
    CHECK(golden.r_plus == 11);
    CHECK(golden.minus_report.holds);
    CHECK(golden.plus_report.holds);

    const Theorem3Check non_residues = check_theorem3(P("x^2+1"), 13);
    CHECK(non_residues.split.roots == Residues{5, 8});
    CHECK(non_residues.split.b == 0);
}

TEST_CASE("x^(q-1) - 1 resultant and its split on random polynomials") {
    std::mt19937_64 rng(83);
    for (int i = 0; i < 100; ++i) {
        const IntPolynomial f = oracle::random_poly(rng, 1, 4, 20);
        for (std::uint64_t q : {3, 5, 7, 11, 13}) {
            if (f.coeff(0) % q == 0 || is_identically_zero_mod(f, q)) continue;
            const Theorem2Check t2 = check_theorem2(f, q, CheckMode::report);
            const Theorem3Check t3 = check_theorem3(f, q, CheckMode::report);
            CHECK(t2.ell == oracle::scan_roots(f, q).size());
            CHECK_FALSE(t2.report.violated());
            CHECK_FALSE(t3.minus_report.violated());
            CHECK_FALSE(t3.plus_report.violated());
            // x^(q-1) - 1 = (x^h - 1)(x^h + 1)
            CHECK(t3.r_minus * t3.r_plus == t2.resultant);
        }
    }
}

TEST_CASE("monic family size") {
    CHECK(monic_family(3, 2).size() == 1 + 3 + 9);
    CHECK(monic_family(13, 3).size() == 1 + 13 + 169 + 2197);
}

TEST_CASE("exhaustive sweep over small primes") {
    for (std::uint64_t q : {2, 3, 5}) {
        const Theorem1Sweep sweep = sweep_theorem1(q, 2, true);
        const std::uint64_t family = monic_family(q, 2).size();
        CHECK(sweep.pairs == family * family);
        CHECK(sweep.clean());
    }
}
