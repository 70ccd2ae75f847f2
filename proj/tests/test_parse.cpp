#include "oracles.hpp"

#include "resq/errors.hpp"
#include "resq/parse.hpp"

#include <doctest.h>

#include <random>

using namespace resq;

namespace {

std::vector<Integer> coeffs_of(const IntPolynomial& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

std::size_t error_position(const char* text) {
    try {
        parse_poly(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("expected a parse error for " << text);
    return 0;
}

}  // namespace

TEST_CASE("parse literals from the worked example") {
    CHECK(coeffs_of(parse_poly("x^6+1")) == std::vector<Integer>{1, 0, 0, 0, 0, 0, 1});

    std::vector<Integer> expected = oracle::binomial_row(6);
    expected[0] += 1;
    CHECK(coeffs_of(parse_poly("(x+1)^6+1")) == expected);
    CHECK(coeffs_of(parse_poly("(x+1)^6+1")) == std::vector<Integer>{2, 6, 15, 20, 15, 6, 1});

    CHECK(parse_poly("0").is_zero());
}

TEST_CASE("operator precedence and unary minus") {
    CHECK(parse_poly("-x^2") == IntPolynomial{0, 0, -1});
    CHECK(parse_poly("2*x^3 - 3*x + 1") == IntPolynomial{1, -3, 0, 2});
    CHECK(parse_poly("-(x-1)*(x+1)") == IntPolynomial{1, 0, -1});
    CHECK(parse_poly("2^10") == IntPolynomial{1024});
    CHECK(parse_poly("x^0") == IntPolynomial{1});
    CHECK(parse_poly("  x  *  x ") == IntPolynomial{0, 0, 1});
    CHECK(parse_poly("--x") == IntPolynomial{0, 1});
    CHECK(parse_poly("123456789012345678901234567890*x") ==
          IntPolynomial{Integer(0), Integer("123456789012345678901234567890")});
}

TEST_CASE("syntax errors carry a position") {
    CHECK(error_position("3x") == 1);
    CHECK(error_position("2(x+1)") == 1);
    CHECK(error_position("(x+1)(x-1)") == 5);
    CHECK(error_position("x+") == 2);
    CHECK(error_position("(x+1") == 4);
    CHECK(error_position("x)") == 1);
    CHECK(error_position("y") == 0);
    CHECK(error_position("x^-1") == 2);
    CHECK(error_position("x^x") == 2);
    CHECK(error_position("") == 0);
    CHECK(error_position("x^1000001") == 2);
    CHECK_THROWS_AS(parse_poly("(x^1000)^1001"), ParseError);
}

TEST_CASE("exponent limit is inclusive") {
    CHECK(*parse_poly("x^1000000").degree() == 1000000);
}

TEST_CASE("canonical output") {
    CHECK(to_string(parse_poly("1+x^6")) == "x^6 + 1");
    CHECK(to_string(parse_poly("(x+1)^6+1")) == "x^6 + 6*x^5 + 15*x^4 + 20*x^3 + 15*x^2 + 6*x + 2");
    CHECK(to_string(parse_poly("-3*x^2+x-7")) == "-3*x^2 + x - 7");
    CHECK(to_string(parse_poly("-x")) == "-x");
    CHECK(to_string(parse_poly("0*x")) == "0");
    CHECK(to_string(parse_poly("-5")) == "-5");
}

TEST_CASE("parse(format(f)) is a fixed point") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        const IntPolynomial f = oracle::random_poly(rng, 0, 10, 100);
        const std::string text = to_string(f);
        CHECK(parse_poly(text) == f);
        CHECK(to_string(parse_poly(text)) == text);
    }
}
