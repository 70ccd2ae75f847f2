#include "resq/selftest.hpp"

#include "resq/lucas.hpp"
#include "resq/matrix.hpp"
#include "resq/modular.hpp"
#include "resq/parse.hpp"
#include "resq/resultant.hpp"

#include <functional>
#include <optional>
#include <random>

namespace resq {

namespace {

using Rng = std::mt19937_64;
using PolyCase = std::vector<IntPolynomial>;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Nonzero polynomial of degree in [min_degree, max_degree], coefficients in [-bound, bound].
IntPolynomial random_poly(Rng& rng, std::size_t min_degree, std::size_t max_degree, long bound) {
    const auto degree = static_cast<std::size_t>(uniform(rng, static_cast<long>(min_degree), static_cast<long>(max_degree)));
    std::vector<Integer> coeffs(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) coeffs[i] = uniform(rng, -bound, bound);
    long lead = 0;
    while (lead == 0) lead = uniform(rng, -bound, bound);
    coeffs[degree] = lead;
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial linear(const Integer& root) { return IntPolynomial{Integer(-root), Integer(1)}; }

std::string describe(const PolyCase& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) out += " ; ";
        out += to_string(c[i]);
    }
    return out;
}

std::string describe(const IntMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i == 0 ? "[" : ", [";
        for (std::size_t j = 0; j < m.cols(); ++j) out += (j == 0 ? "" : ", ") + m(i, j).get_str();
        out += "]";
    }
    return out + "]";
}

/// Simpler neighbours of f: leading term dropped, one coefficient zeroed or halved.
std::vector<IntPolynomial> shrink_candidates(const IntPolynomial& f) {
    std::vector<IntPolynomial> out;
    const auto coeffs = f.coeffs();
    if (coeffs.size() > 1) out.emplace_back(std::vector<Integer>(coeffs.begin(), coeffs.end() - 1));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        std::vector<Integer> zeroed(coeffs.begin(), coeffs.end());
        zeroed[i] = 0;
        out.emplace_back(std::move(zeroed));
        if (abs(coeffs[i]) > 1) {
            std::vector<Integer> halved(coeffs.begin(), coeffs.end());
            halved[i] /= 2;
            out.emplace_back(std::move(halved));
        }
    }
    return out;
}

/// A property returns true when it holds; cases outside its preconditions
/// should return true.
using PolyProperty = std::function<bool(const PolyCase&)>;

bool holds_quietly(const PolyProperty& prop, const PolyCase& c) {
    try {
        return prop(c);
    } catch (const std::exception&) {
        return true;  // not a valid counterexample
    }
}

PolyCase shrink(PolyCase c, const PolyProperty& prop) {
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t i = 0; i < c.size() && !progress; ++i) {
            for (IntPolynomial& candidate : shrink_candidates(c[i])) {
                PolyCase next = c;
                next[i] = std::move(candidate);
                if (!holds_quietly(prop, next)) {
                    c = std::move(next);
                    progress = true;
                    break;
                }
            }
        }
    }
    return c;
}

class Runner {
public:
    explicit Runner(const SelftestOptions& options) : options_(options), rng_(options.seed) {}

    /// Randomized suite over polynomial tuples with shrinking.
    void poly_suite(const std::string& name, const std::function<PolyCase(Rng&)>& generate, const PolyProperty& prop) {
        SuiteOutcome out;
        out.name = name;
        for (std::size_t i = 0; i < options_.random_cases; ++i) {
            PolyCase c = generate(rng_);
            ++out.cases;
            bool ok = false;
            std::string error;
            try {
                ok = prop(c);
            } catch (const std::exception& e) {
                error = e.what();
            }
            if (ok) continue;
            if (++out.failures == 1) {
                out.counterexample = describe(error.empty() ? shrink(c, prop) : c);
                if (!error.empty()) out.counterexample += " (" + error + ")";
            }
        }
        results_.push_back(std::move(out));
    }

    /// Generic suite: `body` runs every case and reports failures through the outcome.
    void suite(const std::string& name, const std::function<void(SuiteOutcome&, Rng&)>& body) {
        SuiteOutcome out;
        out.name = name;
        try {
            body(out, rng_);
        } catch (const std::exception& e) {
            ++out.failures;
            if (out.counterexample.empty()) out.counterexample = std::string("exception: ") + e.what();
        }
        results_.push_back(std::move(out));
    }

    std::size_t random_cases() const { return options_.random_cases; }
    std::vector<SuiteOutcome> take() { return std::move(results_); }

private:
    SelftestOptions options_;
    Rng rng_;
    std::vector<SuiteOutcome> results_;
};

void expect(SuiteOutcome& out, bool ok, const std::function<std::string()>& what) {
    ++out.cases;
    if (ok) return;
    if (++out.failures == 1) out.counterexample = what();
}

Integer cofactor_det(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Integer total = 0;
    std::vector<std::size_t> rows(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) rows[i] = i + 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < n; ++c) {
            if (c != j) cols.push_back(c);
        }
        const Integer minor = cofactor_det(a.submatrix(rows, cols));
        if (j % 2 == 0) {
            total += a(0, j) * minor;
        } else {
            total -= a(0, j) * minor;
        }
    }
    return total;
}

IntMatrix random_matrix(Rng& rng, std::size_t n, long bound) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(rng, -bound, bound);
    }
    return m;
}

std::vector<std::uint64_t> odd_primes_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 3; p <= limit; p += 2) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

void fixture_suites(Runner& run) {
    run.suite("worked_example", [](SuiteOutcome& out, Rng&) {
        const IntPolynomial f = parse_poly("x^6+1");
        const IntPolynomial g = parse_poly("(x+1)^6+1");
        for (Engine e : {Engine::sylvester, Engine::remainder_matrix, Engine::euclidean}) {
            const Integer r = resultant(f, g, e).value;
            expect(out, r == 175760, [&] { return std::string(engine_name(e)) + " gave " + r.get_str(); });
        }
        const IntMatrix expected{{1, -6, -15, -20, -15, -6}, {6, 1, -6, -15, -20, -15}, {15, 6, 1, -6, -15, -20},
                                 {20, 15, 6, 1, -6, -15},    {15, 20, 15, 6, 1, -6},    {6, 15, 20, 15, 6, 1}};
        const IntMatrix a = remainder_matrix(f, g).matrix;
        expect(out, a == expected, [&] { return "remainder matrix " + describe(a); });
        const Integer det = det_exact(a);
        expect(out, abs(det) == 175760, [&] { return "det " + det.get_str(); });

        const ModMatrix rref = rref_mod(reduce_mod(a, 13));
        const ModMatrix rref_expected(13, {{1, 0, 0, 7, 4, 8},
                                           {0, 1, 0, 4, 0, 3},
                                           {0, 0, 1, 8, 3, 11},
                                           {0, 0, 0, 0, 0, 0},
                                           {0, 0, 0, 0, 0, 0},
                                           {0, 0, 0, 0, 0, 0}});
        expect(out, rref == rref_expected, [] { return std::string("rref mod 13 differs from the fixture"); });
        expect(out, rank_mod(reduce_mod(a, 13)) == 3, [] { return std::string("rank mod 13 is not 3"); });
        const ModAnalysis an = analyze(f, g, 13);
        expect(out, an.common_roots == Residues{5, 6, 7}, [] { return std::string("common roots mod 13 differ"); });
    });
}

void poly_core_suites(Runner& run) {
    auto triple = [](Rng& rng) {
        return PolyCase{random_poly(rng, 0, 4, 9), random_poly(rng, 0, 4, 9), random_poly(rng, 0, 4, 9)};
    };
    run.poly_suite("ring_axioms", triple, [](const PolyCase& c) {
        const auto& [f, g, h] = std::tie(c[0], c[1], c[2]);
        return f + g == g + f && f * g == g * f && (f + g) + h == f + (g + h) && (f * g) * h == f * (g * h) &&
               f * (g + h) == f * g + f * h;
    });
    run.poly_suite("rat_divrem_roundtrip", triple, [](const PolyCase& c) {
        if (c[1].is_zero()) return true;
        const RatPolynomial num = to_rational(c[0] * c[2]);
        const RatPolynomial den = to_rational(c[1]);
        const RatDivRem qr = rat_divrem(num, den);
        const bool degree_ok = qr.remainder.is_zero() || *qr.remainder.degree() < *den.degree();
        return degree_ok && qr.quotient * den + qr.remainder == num;
    });
    run.poly_suite("parse_format_fixed_point", triple, [](const PolyCase& c) {
        return parse_poly(to_string(c[0])) == c[0];
    });
    run.poly_suite("substitute_power_evaluation", triple, [](const PolyCase& c) {
        for (long t = -3; t <= 3; ++t) {
            for (std::uint64_t p = 1; p <= 3; ++p) {
                if (substitute_power(c[0], p)(Integer(t)) != c[0](pow(Integer(t), p))) return false;
            }
        }
        return true;
    });
    run.suite("eval_mod_vs_exact", [&run](SuiteOutcome& out, Rng& rng) {
        for (std::size_t i = 0; i < run.random_cases(); ++i) {
            const IntPolynomial f = random_poly(rng, 0, 6, 50);
            const Integer x0 = uniform(rng, -100, 100);
            const auto m = static_cast<std::uint64_t>(uniform(rng, 2, 1000));
            const std::uint64_t got = poly_eval_mod(f, x0, m);
            expect(out, got == residue(f(x0), m), [&] { return to_string(f) + " at " + x0.get_str(); });
        }
    });
}

void linear_suites(Runner& run) {
    run.suite("det_vs_cofactor", [&run](SuiteOutcome& out, Rng& rng) {
        for (std::size_t i = 0; i < run.random_cases(); ++i) {
            const IntMatrix a = random_matrix(rng, static_cast<std::size_t>(uniform(rng, 1, 5)), 50);
            expect(out, det_exact(a) == cofactor_det(a), [&] { return describe(a); });
        }
    });
    run.suite("det_mod_consistency", [&run](SuiteOutcome& out, Rng& rng) {
        for (std::size_t i = 0; i < run.random_cases(); ++i) {
            const IntMatrix a = random_matrix(rng, static_cast<std::size_t>(uniform(rng, 1, 6)), 50);
            for (std::uint64_t q : {2, 3, 5, 7, 13}) {
                expect(out, residue(det_exact(a), q) == det_mod(reduce_mod(a, q)), [&] { return describe(a); });
            }
        }
    });
    run.suite("triangularize_preserves_det", [&run](SuiteOutcome& out, Rng& rng) {
        for (std::size_t i = 0; i < run.random_cases(); ++i) {
            const IntMatrix a = random_matrix(rng, static_cast<std::size_t>(uniform(rng, 1, 6)), 20);
            for (std::uint64_t q : {2, 3, 5, 7, 13}) {
                const Triangularization t = triangularize_det_preserving(a, q);
                const bool ok = det_exact(a) == t.sign * det_exact(t.reduced) &&
                                reduce_mod(t.reduced, q).is_upper_triangular();
                expect(out, ok, [&] { return describe(a) + " q=" + std::to_string(q); });
            }
        }
    });
    run.suite("rank_equals_rref_rows", [&run](SuiteOutcome& out, Rng& rng) {
        for (std::size_t i = 0; i < run.random_cases(); ++i) {
            const IntMatrix a = random_matrix(rng, static_cast<std::size_t>(uniform(rng, 1, 6)), 3);
            const ModMatrix m = reduce_mod(a, 3);
            const ModMatrix r = rref_mod(m);
            std::size_t nonzero = 0;
            for (std::size_t row = 0; row < r.rows(); ++row) nonzero += r.is_zero_row(row) ? 0 : 1;
            expect(out, nonzero == rank_mod(m), [&] { return describe(a); });
        }
    });
    run.suite("minor_valuation_full_size", [&run](SuiteOutcome& out, Rng& rng) {
        for (std::size_t i = 0; i < run.random_cases() / 4; ++i) {
            const IntMatrix a = random_matrix(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), 30);
            expect(out, minor_valuations(a, 5, a.rows()) == valuation(det_exact(a), 5), [&] { return describe(a); });
        }
    });
}

void resultant_suites(Runner& run) {
    auto pair = [](Rng& rng) { return PolyCase{random_poly(rng, 0, 6, 9), random_poly(rng, 0, 6, 9)}; };
    run.poly_suite("cross_engine_equality", pair, [](const PolyCase& c) {
        const Integer s = resultant_sylvester(c[0], c[1]);
        return s == resultant_remainder_matrix(c[0], c[1]) && s == resultant_euclidean(c[0], c[1]);
    });
    run.poly_suite("swap_sign", pair, [](const PolyCase& c) {
        const std::size_t nm = *c[0].degree() * *c[1].degree();
        const Integer fg = resultant_sylvester(c[0], c[1]);
        const Integer gf = resultant_sylvester(c[1], c[0]);
        return nm % 2 == 0 ? fg == gf : fg == -gf;
    });
    run.poly_suite(
        "multiplicativity",
        [](Rng& rng) { return PolyCase{random_poly(rng, 0, 3, 9), random_poly(rng, 0, 3, 9), random_poly(rng, 0, 3, 9)}; },
        [](const PolyCase& c) {
            const auto& [f, g, h] = std::tie(c[0], c[1], c[2]);
            if (f.is_zero() || g.is_zero() || h.is_zero()) return true;
            return resultant_euclidean(f * h, g) == resultant_euclidean(f, g) * resultant_euclidean(h, g) &&
                   resultant_euclidean(f, g * h) == resultant_euclidean(f, g) * resultant_euclidean(f, h);
        });
    run.poly_suite(
        "euclidean_reduction",
        [](Rng& rng) { return PolyCase{random_poly(rng, 1, 4, 9), random_poly(rng, 0, 3, 9), random_poly(rng, 0, 3, 9)}; },
        [](const PolyCase& c) {
            const auto& [f, v, h] = std::tie(c[0], c[1], c[2]);
            if (f.is_zero() || h.is_zero() || v.is_zero() || *h.degree() >= *f.degree()) return true;
            const IntPolynomial g = v * f + h;
            const Integer lhs = resultant_sylvester(f, g);
            return lhs == pow(f.leading(), *g.degree() - *h.degree()) * resultant_sylvester(f, h);
        });
    run.poly_suite("power_substitution", pair, [](const PolyCase& c) {
        if (c[0].is_zero() || c[1].is_zero()) return true;
        const Integer base = resultant_euclidean(c[0], c[1]);
        for (std::uint64_t p : {2, 3}) {
            if (resultant_euclidean(substitute_power(c[0], p), substitute_power(c[1], p)) != pow(base, p)) return false;
        }
        return true;
    });
    run.suite("planted_roots", [&run](SuiteOutcome& out, Rng& rng) {
        for (std::size_t i = 0; i < run.random_cases(); ++i) {
            // f = a * prod(x - alpha), g = b * prod(x - beta)
            const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
            const auto m = static_cast<std::size_t>(uniform(rng, 1, 3));
            long a = 0;
            long b = 0;
            while (a == 0) a = uniform(rng, -4, 4);
            while (b == 0) b = uniform(rng, -4, 4);
            IntPolynomial f = IntPolynomial::constant(a);
            IntPolynomial g = IntPolynomial::constant(b);
            std::vector<long> alpha(n);
            std::vector<long> beta(m);
            for (long& r : alpha) f *= linear(r = uniform(rng, -5, 5));
            for (long& r : beta) g *= linear(r = uniform(rng, -5, 5));
            Integer expected = pow(Integer(a), m) * pow(Integer(b), n);
            for (long x : alpha) {
                for (long y : beta) expected *= x - y;
            }
            const Integer got = resultant_sylvester(f, g);
            expect(out, got == expected, [&] { return to_string(f) + " ; " + to_string(g); });
            // A shared root forces zero.
            const IntPolynomial shared = linear(alpha[0]);
            expect(out, resultant_sylvester(f, g * shared) == 0, [&] { return to_string(f) + " shared root"; });
        }
    });
    run.suite("cyclotomic_vs_sylvester", [&run](SuiteOutcome& out, Rng& rng) {
        for (std::size_t i = 0; i < run.random_cases() / 4; ++i) {
            const IntPolynomial f = random_poly(rng, 1, 4, 9);
            const auto e = static_cast<std::uint64_t>(uniform(rng, 1, 30));
            for (int sign : {-1, 1}) {
                const IntPolynomial binomial = IntPolynomial::monomial(1, e) + IntPolynomial::constant(sign);
                expect(out, cyclotomic_style_resultant(f, e, sign) == resultant_sylvester(f, binomial),
                       [&] { return to_string(f) + " e=" + std::to_string(e); });
            }
        }
    });
}

void modular_suites(Runner& run) {
    run.suite("theorem1_exhaustive", [](SuiteOutcome& out, Rng&) {
        for (std::uint64_t q : {3, 5, 7}) {
            const Theorem1Sweep s = sweep_theorem1(q, 2, true);
            out.cases += s.pairs;
            if (!s.clean()) {
                out.failures += 1;
                if (out.counterexample.empty() && s.first_failure) {
                    out.counterexample = describe(PolyCase{s.first_failure->first, s.first_failure->second}) +
                                         " q=" + std::to_string(q);
                }
            }
        }
    });
    run.suite("theorems2_3", [&run](SuiteOutcome& out, Rng& rng) {
        for (std::uint64_t q : odd_primes_upto(31)) {
            for (std::size_t i = 0; i < run.random_cases() / 20; ++i) {
                IntPolynomial f = random_poly(rng, 1, 4, 9);
                if (residue(f.coeff(0), q) == 0) f += IntPolynomial::constant(1);
                const Theorem2Check t2 = check_theorem2(f, q, CheckMode::report);
                const Theorem3Check t3 = check_theorem3(f, q, CheckMode::report);
                const bool ok = !t2.report.violated() && !t3.minus_report.violated() && !t3.plus_report.violated() &&
                                t3.r_minus * t3.r_plus == t2.resultant;
                expect(out, ok, [&] { return to_string(f) + " q=" + std::to_string(q); });
            }
        }
    });
}

void lucas_suites(Runner& run) {
    run.suite("lucas_mod_vs_exact", [&run](SuiteOutcome& out, Rng& rng) {
        for (std::size_t i = 0; i < run.random_cases(); ++i) {
            const LucasParams params(uniform(rng, -20, 20), uniform(rng, -20, 20));
            const auto n = static_cast<std::uint64_t>(uniform(rng, 0, 200));
            const auto m = static_cast<std::uint64_t>(uniform(rng, 2, 1'000'000));
            expect(out, lucas_v_mod(n, params, m) == residue(lucas_v_exact(n, params), m),
                   [&] { return "P=" + params.p().get_str() + " Q=" + params.q().get_str() + " n=" + std::to_string(n); });
        }
    });
    run.suite("lucas_doubling_identity", [&run](SuiteOutcome& out, Rng& rng) {
        for (std::size_t i = 0; i < run.random_cases() / 10; ++i) {
            const LucasParams params(uniform(rng, -20, 20), uniform(rng, -20, 20));
            for (std::uint64_t n = 0; n <= 100; n += 7) {
                const Integer vn = lucas_v_exact(n, params);
                expect(out, lucas_v_exact(2 * n, params) == vn * vn - 2 * pow(params.q(), n),
                       [&] { return "P=" + params.p().get_str() + " Q=" + params.q().get_str(); });
            }
        }
    });
    run.suite("theorem4_corollary2", [](SuiteOutcome& out, Rng& rng) {
        for (std::uint64_t q : odd_primes_upto(100)) {
            for (int i = 0; i < 10; ++i) {
                const LucasParams params(uniform(rng, -50, 50), uniform(rng, -50, 50));
                const CongruencePair t4 = check_theorem4(params, q);
                const Corollary2Check c2 = check_corollary2(uniform(rng, -50, 50), params, q);
                expect(out, !t4.any_violated() && !c2.reports.any_violated() && c2.discriminant_identity,
                       [&] { return "P=" + params.p().get_str() + " Q=" + params.q().get_str() + " q=" + std::to_string(q); });
            }
        }
    });
    run.suite("lucas_surveys", [](SuiteOutcome& out, Rng&) {
        for (std::uint64_t q : odd_primes_upto(200)) {
            std::vector<CongruenceReport> reports;
            if (q % 5 == 1 || q % 5 == 4) reports = survey_section31(q);
            if (q % 8 == 1 || q % 8 == 7) {
                std::vector<CongruenceReport> more = survey_section32(q);
                reports.insert(reports.end(), more.begin(), more.end());
            }
            for (const CongruenceReport& r : reports) {
                expect(out, !r.violated(), [&] { return r.label + " q=" + std::to_string(q); });
            }
        }
    });
    run.suite("resultant_lucas_bridge", [](SuiteOutcome& out, Rng& rng) {
        for (std::uint64_t q : odd_primes_upto(31)) {
            for (int i = 0; i < 5; ++i) {
                const LucasParams params(uniform(rng, -9, 9), uniform(rng, -9, 9));
                const LucasIdentity id = resultant_lucas_identity(params, q);
                expect(out, id.match, [&] { return "P=" + params.p().get_str() + " Q=" + params.q().get_str(); });
            }
        }
    });
}

}  // namespace

std::vector<SuiteOutcome> run_selftest(const SelftestOptions& options) {
    Runner run(options);
    fixture_suites(run);
    poly_core_suites(run);
    linear_suites(run);
    resultant_suites(run);
    modular_suites(run);
    lucas_suites(run);
    return run.take();
}

}  // namespace resq
