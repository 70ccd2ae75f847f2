#include "oracles.hpp"

#include "resq/errors.hpp"
#include "resq/matrix.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace resq;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> entry(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
    }
    return m;
}

/// All k-subsets of [0, n), lexicographic.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask[i]) s.push_back(i);
        }
        out.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

/// Minimum over all k×k minors of the repeated-division valuation; -1 if all vanish.
long brute_force_min_minor_valuation(const IntMatrix& a, unsigned long q, std::size_t k) {
    long best = -1;
    for (const auto& rows : subsets(a.rows(), k)) {
        for (const auto& cols : subsets(a.cols(), k)) {
            const long v = oracle::repeated_division_valuation(oracle::cofactor_det(a.submatrix(rows, cols)), q);
            if (v >= 0 && (best < 0 || v < best)) best = v;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("valuation") {
    CHECK(valuation(175760, 13) == Valuation(3));
    CHECK(valuation(175760, 2) == Valuation(4));
    CHECK(valuation(1, 7) == Valuation(0));
    CHECK(valuation(-49, 7) == Valuation(2));
    CHECK(valuation(0, 5).is_infinite());
    CHECK(valuation(0, 5).at_least(1'000'000));
    CHECK(Valuation(3) < Valuation::infinite());
    CHECK(Valuation::infinite().to_string() == "inf");
    CHECK_THROWS_AS(valuation(10, 4), DomainError);
}

TEST_CASE("primality") {
    for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == oracle::trial_division_prime(n));
    CHECK(is_prime(1'000'000'007ULL));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("det_exact fixtures") {
    CHECK(det_exact(IntMatrix::identity(3)) == 1);
    CHECK(det_exact(IntMatrix()) == 1);
    const IntMatrix a = oracle::worked_example_matrix();
    const Integer oracle_det = oracle::cofactor_det(a);
    CHECK(oracle_det == 175760);
    CHECK(det_exact(a) == oracle_det);
    CHECK(det_exact(IntMatrix{{1, 2, 3}, {4, 5, 6}, {1, 2, 3}}) == 0);
    CHECK(det_exact(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), DomainError);
}

TEST_CASE("det_exact agrees with cofactor expansion") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 400; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 5);
        const IntMatrix a = random_matrix(rng, n, n, 50);
        CHECK(det_exact(a) == oracle::cofactor_det(a));
    }
    // Sparse matrices force the pivot search.
    for (int i = 0; i < 200; ++i) {
        IntMatrix a = random_matrix(rng, 5, 5, 1);
        CHECK(det_exact(a) == oracle::cofactor_det(a));
    }
}

TEST_CASE("det mod q matches exact determinant") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 6);
        const IntMatrix a = random_matrix(rng, n, n, 40);
        for (std::uint64_t q : {2, 3, 5, 7, 13}) CHECK(det_mod(reduce_mod(a, q)) == residue(det_exact(a), q));
    }
}

TEST_CASE("reduce_mod") {
    const ModMatrix m = reduce_mod(oracle::worked_example_matrix(), 13);
    CHECK(m(0, 1) == 7);
    CHECK(m(0, 2) == 11);
    CHECK(reduce_mod(IntMatrix(2, 3), 5) == ModMatrix(5, 2, 3));
    CHECK(reduce_mod(IntMatrix::identity(3), 2) == ModMatrix(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK_THROWS_AS(reduce_mod(IntMatrix::identity(2), 9), DomainError);
    CHECK_THROWS_AS(ModMatrix(1, 1, 1), DomainError);
}

TEST_CASE("rank_mod and rref_mod on the worked example") {
    const ModMatrix a = reduce_mod(oracle::worked_example_matrix(), 13);
    CHECK(rank_mod(a) == 3);
    const ModMatrix expected(13, {{1, 0, 0, 7, 4, 8},
                                  {0, 1, 0, 4, 0, 3},
                                  {0, 0, 1, 8, 3, 11},
                                  {0, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 0}});
    CHECK(rref_mod(a) == expected);
}

TEST_CASE("rank and rref small cases") {
    CHECK(rank_mod(ModMatrix(7, 3, 4)) == 0);
    CHECK(rank_mod(reduce_mod(IntMatrix::identity(5), 7)) == 5);
    CHECK(rref_mod(reduce_mod(IntMatrix::identity(4), 3)) == reduce_mod(IntMatrix::identity(4), 3));
    CHECK(rref_mod(ModMatrix(13, {{2, 4}})) == ModMatrix(13, {{1, 2}}));
}

TEST_CASE("rank equals nonzero rows of the rref, and the rref is idempotent") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        const IntMatrix a = random_matrix(rng, 1 + i % 5, 1 + (i / 5) % 6, 2);
        const ModMatrix m = reduce_mod(a, 3);
        const ModMatrix r = rref_mod(m);
        std::size_t nonzero = 0;
        for (std::size_t row = 0; row < r.rows(); ++row) nonzero += r.is_zero_row(row) ? 0 : 1;
        CHECK(nonzero == rank_mod(m));
        CHECK(rref_mod(r) == r);
    }
}

TEST_CASE("triangularize_det_preserving on the worked example") {
    const IntMatrix a = oracle::worked_example_matrix();
    const Triangularization t = triangularize_det_preserving(a, 13);
    const ModMatrix image = reduce_mod(t.reduced, 13);
    CHECK(image.is_upper_triangular());
    std::size_t zero_rows = 0;
    for (std::size_t i = 0; i < image.rows(); ++i) zero_rows += image.is_zero_row(i) ? 1 : 0;
    CHECK(zero_rows == 3);
    for (std::size_t i = 3; i < 6; ++i) CHECK(image.is_zero_row(i));
    CHECK(t.sign * det_exact(t.reduced) == 175760);
    CHECK(abs(oracle::cofactor_det(t.reduced)) == 175760);
}

TEST_CASE("triangularize trivial inputs") {
    const IntMatrix upper{{2, 5, -1}, {0, 3, 4}, {0, 0, 7}};
    const Triangularization t = triangularize_det_preserving(upper, 11);
    CHECK(t.reduced == upper);
    CHECK(t.sign == 1);
    const IntMatrix single{{26}};
    const Triangularization s = triangularize_det_preserving(single, 13);
    CHECK(s.reduced == single);
    CHECK(s.sign == 1);
}

TEST_CASE("triangularize preserves |det| and yields an upper triangular image") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 6);
        const IntMatrix a = random_matrix(rng, n, n, 20);
        for (std::uint64_t q : {2, 3, 5, 7, 13}) {
            const Triangularization t = triangularize_det_preserving(a, q);
            CHECK(det_exact(a) == t.sign * det_exact(t.reduced));
            CHECK(reduce_mod(t.reduced, q).is_upper_triangular());
        }
    }
}

TEST_CASE("minor valuations on the worked example") {
    const IntMatrix a = oracle::worked_example_matrix();
    // rank 3 mod 13, so k×k minors carry at least k - 3 factors of 13.
    const long brute4 = brute_force_min_minor_valuation(a, 13, 4);
    const long brute5 = brute_force_min_minor_valuation(a, 13, 5);
    CHECK(brute4 >= 1);
    CHECK(brute5 >= 2);
    CHECK(minor_valuations(a, 13, 4) == Valuation(static_cast<std::uint64_t>(brute4)));
    CHECK(minor_valuations(a, 13, 5) == Valuation(static_cast<std::uint64_t>(brute5)));
    CHECK(minor_valuations(a, 13, 6) == Valuation(3));
    CHECK(minor_valuations(IntMatrix::identity(4), 7, 4) == Valuation(0));
    CHECK(minor_valuations(IntMatrix(3, 3), 7, 2).is_infinite());
}

TEST_CASE("minor enumeration cap and shape errors") {
    CHECK_THROWS_AS(minor_valuations(IntMatrix::identity(3), 5, 4), DomainError);
    CHECK_THROWS_AS(minor_valuations(IntMatrix::identity(20), 5, 10), CapExceeded);
    CHECK_THROWS_AS(minor_valuations(oracle::worked_example_matrix(), 13, 3, 10), CapExceeded);
}

TEST_CASE("full-size minor valuation equals the determinant valuation") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
        const IntMatrix a = random_matrix(rng, n, n, 25);
        CHECK(minor_valuations(a, 5, n) == valuation(det_exact(a), 5));
    }
}
