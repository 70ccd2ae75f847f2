#include "resq/modular.hpp"

#include "resq/errors.hpp"
#include "resq/matrix.hpp"
#include "resq/parse.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace resq {

namespace {

void require_not_identically_zero(const IntPolynomial& f, std::uint64_t q, const char* name) {
    if (is_identically_zero_mod(f, q)) {
        throw DomainError(std::string(name) + " is identically zero in Z_" + std::to_string(q) +
                          "; then R(f, g) is divisible by q^n or q^m outright and this trivial case is not analyzed");
    }
}

void require_unit_constant_term(const IntPolynomial& f, std::uint64_t q) {
    if (residue(f.coeff(0), q) == 0) {
        throw DomainError("constant term of f must be nonzero mod " + std::to_string(q));
    }
}

std::size_t intersection_size(const Residues& a, const Residues& b) {
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

std::size_t trailing_zero_rows(const ModMatrix& m) {
    std::size_t count = 0;
    for (std::size_t i = m.rows(); i-- > 0 && m.is_zero_row(i);) ++count;
    return count;
}

std::string describe_pair(const IntPolynomial& f, const IntPolynomial& g, std::uint64_t q) {
    return "f = " + to_string(f) + ", g = " + to_string(g) + ", q = " + std::to_string(q);
}

}  // namespace

bool is_identically_zero_mod(const IntPolynomial& f, std::uint64_t q) {
    return std::all_of(f.coeffs().begin(), f.coeffs().end(), [q](const Integer& c) { return residue(c, q) == 0; });
}

Residues roots_mod(const IntPolynomial& f, std::uint64_t q, std::uint64_t cap) {
    require_prime(q);
    if (q > cap) {
        throw CapExceeded("root scan modulus " + std::to_string(q) + " exceeds the cap of " + std::to_string(cap));
    }
    require_not_identically_zero(f, q, "polynomial");
    const std::vector<std::uint64_t> coeffs = reduce_coeffs(f, q);
    Residues roots;
    for (std::uint64_t x = 0; x < q; ++x) {
        if (eval_residues(coeffs, x, q) == 0) roots.push_back(x);
    }
    return roots;
}

Residues common_roots(const IntPolynomial& f, const IntPolynomial& g, std::uint64_t q, std::uint64_t cap) {
    const Residues rf = roots_mod(f, q, cap);
    const Residues rg = roots_mod(g, q, cap);
    Residues out;
    std::set_intersection(rf.begin(), rf.end(), rg.begin(), rg.end(), std::back_inserter(out));
    return out;
}

ModAnalysis analyze(const IntPolynomial& f, const IntPolynomial& g, std::uint64_t q, CheckMode mode,
                    std::uint64_t cap) {
    require_prime(q, "q");
    require_not_identically_zero(f, q, "f");
    require_not_identically_zero(g, q, "g");

    ModAnalysis a;
    a.q = q;
    a.f = f;
    a.g = g;
    a.roots_f = roots_mod(f, q, cap);
    a.roots_g = roots_mod(g, q, cap);
    std::set_intersection(a.roots_f.begin(), a.roots_f.end(), a.roots_g.begin(), a.roots_g.end(),
                          std::back_inserter(a.common_roots));
    a.ell = a.common_roots.size();
    a.n = *f.degree();
    a.m = *g.degree();
    a.resultant = resultant_sylvester(f, g);
    a.v_q = valuation(a.resultant, q);
    a.bound_theorem1 = a.v_q.at_least(a.ell);

    if (residue(f.leading(), q) != 0) {
        // Row multipliers from clearing denominators are powers of units mod q.
        const RemainderMatrix rm = remainder_matrix(f, g);
        a.rank_p = rank_mod(reduce_mod(rm.matrix, q));
        const std::size_t deficiency = a.n - *a.rank_p;
        a.bound_corollary1 = a.v_q.at_least(deficiency);
        a.ell_vs_rank = deficiency >= a.ell;
    }

    if (mode == CheckMode::strict && !a.all_bounds_hold()) {
        throw InternalError("divisibility bound violated for " + describe_pair(f, g, q));
    }
    return a;
}

bool is_quadratic_residue(std::uint64_t r, std::uint64_t q) {
    r %= q;
    return r != 0 && pow_mod(r, (q - 1) / 2, q) == 1;
}

QrSplit split_quadratic_residues(const Residues& roots, std::uint64_t q) {
    require_odd_prime(q);
    QrSplit s;
    s.q = q;
    s.roots = roots;
    std::copy_if(roots.begin(), roots.end(), std::back_inserter(s.residue_roots),
                 [q](std::uint64_t r) { return is_quadratic_residue(r, q); });
    s.b = s.residue_roots.size();
    return s;
}

Theorem2Check check_theorem2(const IntPolynomial& f, std::uint64_t q, CheckMode mode) {
    require_odd_prime(q, "q");
    require_unit_constant_term(f, q);
    Theorem2Check c;
    c.roots = roots_mod(f, q);
    c.ell = c.roots.size();
    c.resultant = cyclotomic_style_resultant(f, q - 1, -1);
    c.v_q = valuation(c.resultant, q);
    c.report = make_congruence("theorem2", q, c.ell, c.resultant, 0);
    if (mode == CheckMode::strict && c.report.violated()) {
        throw InternalError("R(f, x^(q-1) - 1) not divisible by q^ell for f = " + to_string(f) + ", q = " + std::to_string(q));
    }
    return c;
}

Theorem3Check check_theorem3(const IntPolynomial& f, std::uint64_t q, CheckMode mode) {
    require_odd_prime(q, "q");
    require_unit_constant_term(f, q);
    Theorem3Check c;
    c.split = split_quadratic_residues(roots_mod(f, q), q);
    const std::uint64_t half = (q - 1) / 2;
    c.r_minus = cyclotomic_style_resultant(f, half, -1);
    c.r_plus = cyclotomic_style_resultant(f, half, +1);
    c.minus_report = make_congruence("theorem3_minus", q, c.split.b, c.r_minus, 0);
    c.plus_report = make_congruence("theorem3_plus", q, c.split.roots.size() - c.split.b, c.r_plus, 0);
    if (mode == CheckMode::strict && (c.minus_report.violated() || c.plus_report.violated())) {
        throw InternalError("quadratic-residue split bound violated for f = " + to_string(f) + ", q = " + std::to_string(q));
    }
    return c;
}

std::vector<IntPolynomial> monic_family(std::uint64_t q, std::size_t max_degree) {
    std::vector<IntPolynomial> family;
    for (std::size_t d = 0; d <= max_degree; ++d) {
        std::vector<std::uint64_t> digits(d, 0);
        for (;;) {
            std::vector<Integer> coeffs(d + 1);
            for (std::size_t i = 0; i < d; ++i) coeffs[i] = static_cast<unsigned long>(digits[i]);
            coeffs[d] = 1;
            family.emplace_back(std::move(coeffs));
            std::size_t pos = 0;
            while (pos < d && ++digits[pos] == q) digits[pos++] = 0;
            if (pos == d) break;
        }
    }
    return family;
}

Theorem1Sweep sweep_theorem1(std::uint64_t q, std::size_t max_degree, bool cross_check) {
    require_prime(q);
    Theorem1Sweep s;
    s.q = q;
    s.max_degree = max_degree;
    const std::vector<IntPolynomial> family = monic_family(q, max_degree);
    std::vector<Residues> roots;
    roots.reserve(family.size());
    for (const IntPolynomial& f : family) roots.push_back(roots_mod(f, q));

    for (std::size_t i = 0; i < family.size(); ++i) {
        const IntPolynomial& f = family[i];
        const std::size_t n = *f.degree();
        for (std::size_t j = 0; j < family.size(); ++j) {
            const IntPolynomial& g = family[j];
            ++s.pairs;
            const std::size_t ell = intersection_size(roots[i], roots[j]);
            const IntMatrix a = remainder_matrix(f, g).matrix;
            // Monic f: R(f, g) = det(A).
            const Integer det = det_exact(a);
            const Valuation v = valuation(det, q);
            const std::size_t deficiency = n - rank_mod(reduce_mod(a, q));
            const std::size_t zero_rows = trailing_zero_rows(reduce_mod(triangularize_det_preserving(a, q).reduced, q));

            bool failed = false;
            if (!v.at_least(ell)) {
                ++s.theorem1_violations;
                failed = true;
            }
            if (!v.at_least(deficiency)) {
                ++s.corollary1_violations;
                failed = true;
            }
            if (deficiency < ell) {
                ++s.ell_vs_rank_violations;
                failed = true;
            }
            if (zero_rows < ell) {
                ++s.triangular_violations;
                failed = true;
            }
            if (cross_check && det != resultant_sylvester(f, g)) {
                ++s.lemma1_mismatches;
                failed = true;
            }
            if (failed && !s.first_failure) s.first_failure.emplace(f, g);
        }
    }
    return s;
}

}  // namespace resq
