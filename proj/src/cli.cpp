#include "resq/cli.hpp"

#include "resq/errors.hpp"
#include "resq/lucas.hpp"
#include "resq/modular.hpp"
#include "resq/parse.hpp"
#include "resq/report.hpp"
#include "resq/resultant.hpp"
#include "resq/selftest.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace resq {

namespace {

inline constexpr std::uint64_t kMaxSurveyPrime = 100'000;

struct GlobalOptions {
    std::string format = "text";
    bool strict = false;
};

struct CommandOutput {
    Json document;
    std::string text;
    int exit_code = kExitOk;
    /// Diagnostic for a nonzero exit.
    std::string message;
};

std::string join(const Residues& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i == 0 ? "" : ", ") + std::to_string(values[i]);
    return out + "}";
}

std::string describe(const CongruenceReport& r) {
    std::ostringstream os;
    os << r.label;
    if (r.k) os << " [k=" << r.k->get_str() << "]";
    os << ": " << r.lhs.get_str() << " ≡ " << r.rhs.get_str() << " (mod " << r.q << "^" << r.modulus_power << ") ";
    if (!r.preconditions_met) {
        os << (r.holds ? "holds" : "does not hold") << ", preconditions not met: " << r.reason;
    } else {
        os << (r.holds ? "holds" : "VIOLATED");
    }
    return os.str();
}

std::string flag_text(const std::optional<bool>& flag) {
    if (!flag) return "n/a";
    return *flag ? "true" : "false";
}

CommandOutput cmd_resultant(const std::string& f_text, const std::string& g_text, const std::string& engine_flag) {
    const IntPolynomial f = parse_poly(f_text);
    const IntPolynomial g = parse_poly(g_text);
    std::vector<Engine> engines;
    if (engine_flag == "all") {
        engines = {Engine::sylvester, Engine::remainder_matrix, Engine::euclidean};
    } else {
        engines = {*engine_from_name(engine_flag)};
    }

    CommandOutput out;
    Json per_engine;
    std::vector<ResultantResult> results;
    for (Engine e : engines) {
        results.push_back(resultant(f, g, e));
        per_engine[std::string(engine_name(e))] = to_json(results.back().value);
    }
    bool agreement = true;
    for (const ResultantResult& r : results) agreement = agreement && r.value == results.front().value;

    Json res;
    res["value"] = to_json(results.front().value);
    res["degenerate"] = results.front().degenerate;
    res["engines"] = per_engine;
    res["agreement"] = agreement;
    out.document = make_document("resultant", Json{{"f", to_string(f)}, {"g", to_string(g)}, {"engine", engine_flag}},
                                 std::move(res));

    std::ostringstream text;
    text << "f = " << to_string(f) << "\n"
         << "g = " << to_string(g) << "\n"
         << "R(f, g) = " << results.front().value.get_str() << "\n";
    if (results.front().degenerate) text << "note: zero polynomial input; resultant defined as 0\n";
    for (const ResultantResult& r : results) text << "  " << engine_name(r.engine) << ": " << r.value.get_str() << "\n";
    if (results.size() > 1) text << "engines agree: " << (agreement ? "yes" : "NO") << "\n";
    out.text = text.str();

    if (!agreement) {
        out.exit_code = kExitDisagreement;
        out.message = "resultant engines disagree";
    }
    return out;
}

CommandOutput cmd_analyze(const std::string& f_text, const std::string& g_text, std::uint64_t q, bool strict) {
    const IntPolynomial f = parse_poly(f_text);
    const IntPolynomial g = parse_poly(g_text);
    const ModAnalysis a = analyze(f, g, q, CheckMode::report);

    Json res = to_json(a);
    std::ostringstream text;
    text << "f = " << to_string(f) << " (n = " << a.n << ")\n"
         << "g = " << to_string(g) << " (m = " << a.m << ")\n"
         << "q = " << q << "\n"
         << "roots of f mod q: " << join(a.roots_f) << "\n"
         << "roots of g mod q: " << join(a.roots_g) << "\n"
         << "common roots: " << join(a.common_roots) << " (ell = " << a.ell << ")\n";
    if (residue(f.leading(), q) != 0) {
        const RemainderMatrix rm = remainder_matrix(f, g);
        res["remainder_matrix"] = to_json(rm.matrix);
        res["remainder_scale"] = to_json(rm.scale);
        res["rref_mod"] = to_json(rref_mod(reduce_mod(rm.matrix, q)));
        text << "rank of remainder matrix mod q: " << *a.rank_p << "\n";
    } else {
        text << "rank of remainder matrix mod q: n/a (q divides the leading coefficient of f)\n";
    }
    text << "R(f, g) = " << a.resultant.get_str() << "\n"
         << "v_q(R) = " << a.v_q.to_string() << "\n"
         << "v_q(R) >= ell: " << (a.bound_theorem1 ? "true" : "false") << "\n"
         << "v_q(R) >= n - rank: " << flag_text(a.bound_corollary1) << "\n"
         << "n - rank >= ell: " << flag_text(a.ell_vs_rank) << "\n";

    CommandOutput out;
    out.document = make_document(
        "analyze", Json{{"f", to_string(f)}, {"g", to_string(g)}, {"prime", q}, {"strict", strict}}, std::move(res));
    out.text = text.str();
    if (strict && !a.all_bounds_hold()) {
        out.exit_code = kExitPropertyFailure;
        out.message = "a divisibility bound is violated";
    }
    return out;
}

CommandOutput cmd_lucas(const std::string& p_text, const std::string& q_text, std::uint64_t prime,
                        const std::optional<std::string>& k_text, bool strict) {
    const LucasParams params{Integer(p_text), Integer(q_text)};
    require_odd_prime(prime, "prime");

    Json inputs{{"p", p_text}, {"q_param", q_text}, {"prime", prime}};
    Json res;
    res["discriminant"] = to_json(params.discriminant());
    res["legendre"] = legendre(params.discriminant(), prime);

    CongruencePair pair;
    std::ostringstream text;
    text << "P = " << params.p().get_str() << ", Q = " << params.q().get_str()
         << ", P^2 - 4Q = " << params.discriminant().get_str() << "\n"
         << "Legendre symbol (" << params.discriminant().get_str() << "/" << prime
         << ") = " << legendre(params.discriminant(), prime) << "\n";
    if (k_text) {
        const Integer k(*k_text);
        inputs["k"] = *k_text;
        const Corollary2Check c = check_corollary2(k, params, prime);
        res["shifted_p"] = to_json(c.shifted.p());
        res["shifted_q"] = to_json(c.shifted.q());
        res["discriminant_identity"] = c.discriminant_identity;
        text << "shifted parameters: P' = " << c.shifted.p().get_str() << ", Q' = " << c.shifted.q().get_str() << "\n"
             << "discriminant identity: " << (c.discriminant_identity ? "holds" : "FAILS") << "\n";
        pair = c.reports;
    } else {
        pair = check_theorem4(params, prime);
    }
    res["reports"] = Json::array({to_json(pair.first), to_json(pair.second)});
    text << describe(pair.first) << "\n" << describe(pair.second) << "\n";

    CommandOutput out;
    out.document = make_document("lucas", std::move(inputs), std::move(res));
    out.text = text.str();
    if (strict && pair.any_violated()) {
        out.exit_code = kExitPropertyFailure;
        out.message = "a Lucas congruence is violated";
    }
    return out;
}

CommandOutput cmd_survey(const std::string& family, std::uint64_t prime_max, bool shifts, bool strict) {
    if (prime_max > kMaxSurveyPrime) {
        throw DomainError("--prime-max must not exceed " + std::to_string(kMaxSurveyPrime));
    }
    const bool lucas = family == "lucas";
    Residues primes;
    std::uint64_t checks = 0;
    std::uint64_t precondition_skips = 0;
    Json violations = Json::array();
    for (std::uint64_t q = 3; q <= prime_max; q += 2) {
        if (!is_prime(q)) continue;
        const std::uint64_t modulus = lucas ? 5 : 8;
        if (q % modulus != 1 && q % modulus != modulus - 1) continue;
        primes.push_back(q);
        std::vector<CongruenceReport> reports = lucas ? survey_section31(q) : survey_section32(q);
        if (!shifts) reports.resize(2);
        for (const CongruenceReport& r : reports) {
            ++checks;
            if (!r.preconditions_met) ++precondition_skips;
            if (r.violated()) violations.push_back(to_json(r));
        }
    }

    Json res;
    res["family"] = family;
    res["primes"] = to_json(primes);
    res["checks"] = checks;
    res["precondition_skips"] = precondition_skips;
    res["violation_count"] = violations.size();
    res["violations"] = violations;

    std::ostringstream text;
    text << (lucas ? "Lucas numbers, primes q ≡ ±1 (mod 5)" : "Pell-Lucas numbers, primes q ≡ ±1 (mod 8)")
         << " up to " << prime_max << "\n"
         << "qualifying primes: " << join(primes) << "\n"
         << "congruences checked: " << checks << " (" << precondition_skips << " with unmet preconditions)\n"
         << "violations: " << violations.size() << "\n";

    CommandOutput out;
    out.document = make_document("survey", Json{{"family", family}, {"prime_max", prime_max}, {"shifts", shifts}},
                                 std::move(res));
    out.text = text.str();
    if (strict && !violations.empty()) {
        out.exit_code = kExitPropertyFailure;
        out.message = "survey found violations";
    }
    return out;
}

CommandOutput cmd_selftest(std::uint64_t seed, std::size_t cases) {
    const std::vector<SuiteOutcome> outcomes = run_selftest({seed, cases});
    Json suites = Json::array();
    std::ostringstream text;
    bool all_passed = true;
    for (const SuiteOutcome& s : outcomes) {
        all_passed = all_passed && s.passed();
        suites.push_back(Json{{"name", s.name},
                              {"cases", s.cases},
                              {"failures", s.failures},
                              {"counterexample", s.counterexample}});
        text << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.cases << " cases)";
        if (!s.passed()) text << ": " << s.failures << " failures, first: " << s.counterexample;
        text << "\n";
    }
    text << (all_passed ? "all suites passed" : "selftest FAILED") << "\n";

    CommandOutput out;
    out.document = make_document("selftest", Json{{"seed", seed}, {"cases", cases}},
                                 Json{{"passed", all_passed}, {"suites", std::move(suites)}});
    out.text = text.str();
    if (!all_passed) {
        out.exit_code = kExitPropertyFailure;
        out.message = "selftest failed";
    }
    return out;
}

/// Polynomial arguments such as "-x+1" would otherwise be taken for flags; a
/// leading space is insignificant to the polynomial grammar.
std::vector<std::string> protect_negative_polynomials(std::vector<std::string> args) {
    for (std::string& a : args) {
        if (a.size() >= 2 && a[0] == '-' && (a[1] == 'x' || a[1] == '(' || a[1] == ' ')) a.insert(a.begin(), ' ');
    }
    return args;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact polynomial resultants, prime-power divisibility bounds and Lucas congruences", "resq"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--strict", global.strict, "Exit nonzero when a proven bound or congruence fails");

    std::string f_text;
    std::string g_text;
    std::string engine = "all";
    auto* resultant_cmd = app.add_subcommand("resultant", "Compute R(f, g)");
    resultant_cmd->add_option("f", f_text, "First polynomial")->required();
    resultant_cmd->add_option("g", g_text, "Second polynomial")->required();
    resultant_cmd->add_option("--engine", engine, "sylvester, remainder, euclid or all")
        ->check(CLI::IsMember({"sylvester", "remainder", "euclid", "all"}))
        ->capture_default_str();

    std::uint64_t prime = 0;
    auto* analyze_cmd = app.add_subcommand("analyze", "Common roots, rank and valuation bounds modulo a prime");
    analyze_cmd->add_option("f", f_text, "First polynomial")->required();
    analyze_cmd->add_option("g", g_text, "Second polynomial")->required();
    analyze_cmd->add_option("--prime", prime, "Prime modulus q")->required();

    std::string p_text;
    std::string q_text;
    std::optional<std::string> k_text;
    auto* lucas_cmd = app.add_subcommand("lucas", "Check the Lucas-sequence congruences modulo q^2");
    lucas_cmd->add_option("--p", p_text, "Sequence parameter P")->required();
    lucas_cmd->add_option("--q-param", q_text, "Sequence parameter Q")->required();
    lucas_cmd->add_option("--prime", prime, "Odd prime q")->required();
    lucas_cmd->add_option("--k", k_text, "Shift k for the shifted-parameter congruences");

    std::string family;
    std::uint64_t prime_max = 100;
    bool no_shifts = false;
    auto* survey_cmd = app.add_subcommand("survey", "Sweep the Lucas or Pell-Lucas congruences over primes");
    survey_cmd->add_option("family", family, "lucas or pell-lucas")
        ->required()
        ->check(CLI::IsMember({"lucas", "pell-lucas"}));
    survey_cmd->add_option("--prime-max", prime_max, "Largest prime to include")->capture_default_str();
    survey_cmd->add_flag("--no-shifts", no_shifts, "Only check the unshifted congruences");

    std::uint64_t seed = SelftestOptions{}.seed;
    std::size_t cases = SelftestOptions{}.random_cases;
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in property suites");
    selftest_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    selftest_cmd->add_option("--cases", cases, "Instances per randomized suite")->capture_default_str();

    for (CLI::App* sub : {resultant_cmd, analyze_cmd, lucas_cmd, survey_cmd, selftest_cmd}) sub->fallthrough();

    std::vector<std::string> args = protect_negative_polynomials(raw_args);
    std::vector<const char*> argv{"resq"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
    }

    CommandOutput result;
    try {
        if (resultant_cmd->parsed()) {
            result = cmd_resultant(f_text, g_text, engine);
        } else if (analyze_cmd->parsed()) {
            result = cmd_analyze(f_text, g_text, prime, global.strict);
        } else if (lucas_cmd->parsed()) {
            result = cmd_lucas(p_text, q_text, prime, k_text, global.strict);
        } else if (survey_cmd->parsed()) {
            result = cmd_survey(family, prime_max, !no_shifts, global.strict);
        } else {
            result = cmd_selftest(seed, cases);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        // gmpxx rejects malformed integer literals this way.
        err << "error: invalid integer argument\n";
        return kExitInputError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitDisagreement;
    }

    if (global.format == "json") {
        out << result.document.dump(2) << "\n";
    } else {
        out << result.text;
    }
    if (result.exit_code != kExitOk) err << "error: " << result.message << "\n";
    return result.exit_code;
}

}  // namespace resq
