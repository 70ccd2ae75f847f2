#pragma once

#include "resq/congruence.hpp"
#include "resq/integer.hpp"
#include "resq/polynomial.hpp"
#include "resq/resultant.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace resq {

/// Default upper bound on q for exhaustive root scans.
inline constexpr std::uint64_t kDefaultScanCap = 1'000'000;

using Residues = std::vector<std::uint64_t>;

bool is_identically_zero_mod(const IntPolynomial& f, std::uint64_t q);

/// Distinct roots of f in Z_q, ascending, by exhaustive scan. Throws
/// DomainError if q is not prime or f vanishes identically mod q, and
/// CapExceeded if q > cap.
Residues roots_mod(const IntPolynomial& f, std::uint64_t q, std::uint64_t cap = kDefaultScanCap);

Residues common_roots(const IntPolynomial& f, const IntPolynomial& g, std::uint64_t q,
                      std::uint64_t cap = kDefaultScanCap);

enum class CheckMode {
    /// A violated bound throws InternalError.
    strict,
    /// A violated bound is only recorded in the flags.
    report,
};

struct ModAnalysis {
    std::uint64_t q = 0;
    IntPolynomial f;
    IntPolynomial g;
    Residues roots_f;
    Residues roots_g;
    Residues common_roots;
    std::size_t ell = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    /// Rank over Z_q of the remainder matrix. Absent when q divides the
    /// leading coefficient of a non-monic f, where that matrix has no image mod q.
    std::optional<std::size_t> rank_p;
    Integer resultant;
    Valuation v_q = Valuation::infinite();
    /// v_q >= ell
    bool bound_theorem1 = false;
    /// v_q >= n - rank_p; absent with rank_p.
    std::optional<bool> bound_corollary1;
    /// n - rank_p >= ell; absent with rank_p.
    std::optional<bool> ell_vs_rank;

    bool all_bounds_hold() const {
        return bound_theorem1 && bound_corollary1.value_or(true) && ell_vs_rank.value_or(true);
    }
};

/**
 * Counts the common roots mod q, builds the remainder matrix and its rank
 * mod q, and checks v_q(R) >= ell, v_q(R) >= n - rank and n - rank >= ell.
 *
 * Throws DomainError for composite q or a polynomial that is identically zero
 * mod q. In strict mode a false bound throws InternalError.
 */
ModAnalysis analyze(const IntPolynomial& f, const IntPolynomial& g, std::uint64_t q,
                    CheckMode mode = CheckMode::strict, std::uint64_t cap = kDefaultScanCap);

/// Roots split by Euler's criterion. Zero is never a quadratic residue here.
struct QrSplit {
    std::uint64_t q = 0;
    Residues roots;
    Residues residue_roots;
    std::size_t b = 0;
};

QrSplit split_quadratic_residues(const Residues& roots, std::uint64_t q);

/// True iff r is a nonzero square mod the odd prime q.
bool is_quadratic_residue(std::uint64_t r, std::uint64_t q);

struct Theorem2Check {
    Residues roots;
    std::size_t ell = 0;
    /// R(f, x^(q-1) - 1)
    Integer resultant;
    Valuation v_q = Valuation::infinite();
    CongruenceReport report;
};

/// Verifies R(f, x^(q-1) - 1) ≡ 0 (mod q^ell). Requires an odd prime q and
/// a_0 ≢ 0 (mod q); otherwise throws DomainError. Strict mode throws
/// InternalError when the bound fails.
Theorem2Check check_theorem2(const IntPolynomial& f, std::uint64_t q, CheckMode mode = CheckMode::strict);

struct Theorem3Check {
    QrSplit split;
    /// R(f, x^((q-1)/2) - 1), bounded below by q^b.
    Integer r_minus;
    /// R(f, x^((q-1)/2) + 1), bounded below by q^(ell-b).
    Integer r_plus;
    CongruenceReport minus_report;
    CongruenceReport plus_report;
};

Theorem3Check check_theorem3(const IntPolynomial& f, std::uint64_t q, CheckMode mode = CheckMode::strict);

/// Counters from an exhaustive sweep over monic pairs.
struct Theorem1Sweep {
    std::uint64_t q = 0;
    std::size_t max_degree = 0;
    std::uint64_t pairs = 0;
    std::uint64_t theorem1_violations = 0;
    std::uint64_t corollary1_violations = 0;
    std::uint64_t ell_vs_rank_violations = 0;
    /// Pairs whose triangularized remainder matrix had fewer than ell zero rows mod q.
    std::uint64_t triangular_violations = 0;
    std::uint64_t lemma1_mismatches = 0;
    /// First offending pair, if any.
    std::optional<std::pair<IntPolynomial, IntPolynomial>> first_failure;

    bool clean() const {
        return theorem1_violations + corollary1_violations + ell_vs_rank_violations + triangular_violations +
                   lemma1_mismatches ==
               0;
    }
};

/// All monic polynomials of degree <= max_degree whose lower coefficients lie in [0, q).
std::vector<IntPolynomial> monic_family(std::uint64_t q, std::size_t max_degree);

/**
 * For every ordered pair (f, g) from monic_family(q, max_degree), checks the
 * Theorem 1 and Corollary 1 bounds through the remainder matrix, that the
 * triangularized matrix has at least ell zero rows mod q, and, when
 * `cross_check` is set, that det(remainder matrix) equals the Sylvester
 * resultant.
 */
Theorem1Sweep sweep_theorem1(std::uint64_t q, std::size_t max_degree, bool cross_check = false);

}  // namespace resq
