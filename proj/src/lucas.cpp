#include "resq/lucas.hpp"

#include "resq/errors.hpp"
#include "resq/polynomial.hpp"
#include "resq/resultant.hpp"

#include <bit>
#include <string>

namespace resq {

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    const std::uint64_t s = a + b;
    return (s >= m || s < a) ? s - m : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a >= b ? a - b : a + (m - b); }

Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

/// Fills the precondition fields shared by Theorem 4 and Corollary 2.
void apply_preconditions(CongruencePair& pair, const LucasParams& params, std::uint64_t q) {
    std::string reason;
    if (residue(params.q(), q) == 0) {
        reason = "Q = " + params.q().get_str() + " is divisible by " + std::to_string(q);
    } else if (const int symbol = legendre(params.discriminant(), q); symbol != 1) {
        reason = "Legendre symbol (" + params.discriminant().get_str() + "/" + std::to_string(q) +
                 ") = " + std::to_string(symbol);
    }
    for (CongruenceReport* r : {&pair.first, &pair.second}) {
        r->preconditions_met = reason.empty();
        r->reason = reason;
    }
}

/// Eq. 17/18-style pair for one shift, with the squared right-hand side
/// of the second congruence expanded as c^(q-1) + 2c^((q-1)/2) + 1.
CongruencePair shifted_pair(const LucasParams& base, const Integer& k, std::uint64_t q, const char* first_label,
                            const char* second_label) {
    const LucasParams shifted = base.shifted(k);
    const std::uint64_t m = q * q;
    const std::uint64_t half = (q - 1) / 2;
    const std::uint64_t c = residue(shifted.q(), m);
    const std::uint64_t c_half = pow_mod(c, half, m);
    const std::uint64_t c_full = pow_mod(c, q - 1, m);

    const std::uint64_t v_full = lucas_v_mod(q - 1, shifted, m);
    const std::uint64_t v_half = lucas_v_mod(half, shifted, m);
    const std::uint64_t rhs_second = add_mod(add_mod(c_full, add_mod(c_half, c_half, m), m), 1 % m, m);

    CongruencePair pair{
        make_congruence(first_label, q, 2, to_integer(v_full), to_integer(c_full) + 1),
        make_congruence(second_label, q, 2, to_integer(mul_mod(v_half, v_half, m)), to_integer(rhs_second)),
    };
    pair.first.k = k;
    pair.second.k = k;
    apply_preconditions(pair, shifted, q);
    return pair;
}

/// The k = 0 congruences with right-hand sides 2 and 2 + 2(-1)^((q-1)/2).
CongruencePair unshifted_pair(const LucasParams& params, std::uint64_t q, const char* first_label,
                              const char* second_label) {
    const std::uint64_t m = q * q;
    const std::uint64_t half = (q - 1) / 2;
    const std::uint64_t v_half = lucas_v_mod(half, params, m);
    const Integer rhs_second = half % 2 == 0 ? 4 : 0;
    CongruencePair pair{
        make_congruence(first_label, q, 2, to_integer(lucas_v_mod(q - 1, params, m)), 2),
        make_congruence(second_label, q, 2, to_integer(mul_mod(v_half, v_half, m)), rhs_second),
    };
    apply_preconditions(pair, params, q);
    return pair;
}

std::vector<CongruenceReport> survey(const LucasParams& base, std::uint64_t q, const char* const labels[4]) {
    std::vector<CongruenceReport> out;
    out.reserve(2 * q + 2);
    CongruencePair base_pair = unshifted_pair(base, q, labels[0], labels[1]);
    out.push_back(std::move(base_pair.first));
    out.push_back(std::move(base_pair.second));
    for (std::uint64_t k = 0; k < q; ++k) {
        CongruencePair pair = shifted_pair(base, to_integer(k), q, labels[2], labels[3]);
        out.push_back(std::move(pair.first));
        out.push_back(std::move(pair.second));
    }
    return out;
}

}  // namespace

Integer lucas_v_exact(std::uint64_t n, const LucasParams& params, std::uint64_t cap) {
    if (n > cap) {
        throw CapExceeded("exact Lucas index " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
    }
    Integer prev = 2;
    if (n == 0) return prev;
    Integer cur = params.p();
    for (std::uint64_t i = 2; i <= n; ++i) {
        Integer next = params.p() * cur - params.q() * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::uint64_t lucas_v_mod(std::uint64_t n, const LucasParams& params, std::uint64_t m) {
    if (m < 2) throw DomainError("modulus must be at least 2");
    const std::uint64_t p = residue(params.p(), m);
    const std::uint64_t q = residue(params.q(), m);
    std::uint64_t v = 2 % m;   // V_k
    std::uint64_t w = p;       // V_{k+1}
    std::uint64_t qk = 1 % m;  // Q^k
    for (int bit = std::bit_width(n); bit-- > 0;) {
        // k -> 2k
        const std::uint64_t v2 = sub_mod(mul_mod(v, v, m), add_mod(qk, qk, m), m);
        const std::uint64_t w2 = sub_mod(mul_mod(v, w, m), mul_mod(p, qk, m), m);
        qk = mul_mod(qk, qk, m);
        v = v2;
        w = w2;
        if ((n >> bit) & 1U) {
            // 2k -> 2k + 1; V_{2k+2} = P V_{2k+1} - Q V_{2k}
            const std::uint64_t next = sub_mod(mul_mod(p, w, m), mul_mod(q, v, m), m);
            v = w;
            w = next;
            qk = mul_mod(qk, q, m);
        }
    }
    return v;
}

int legendre(const Integer& a, std::uint64_t q) {
    require_odd_prime(q);
    const std::uint64_t r = residue(a, q);
    if (r == 0) return 0;
    return pow_mod(r, (q - 1) / 2, q) == 1 ? 1 : -1;
}

CongruencePair check_theorem4(const LucasParams& params, std::uint64_t q) {
    require_odd_prime(q);
    const std::uint64_t m = q * q;
    const std::uint64_t half = (q - 1) / 2;
    const std::uint64_t qm = residue(params.q(), m);
    const std::uint64_t v_half = lucas_v_mod(half, params, m);
    const std::uint64_t rhs_root = add_mod(pow_mod(qm, half, m), 1 % m, m);

    CongruencePair pair{
        make_congruence("eq12", q, 2, to_integer(lucas_v_mod(q - 1, params, m)), to_integer(pow_mod(qm, q - 1, m)) + 1),
        make_congruence("eq13", q, 2, to_integer(mul_mod(v_half, v_half, m)), to_integer(mul_mod(rhs_root, rhs_root, m))),
    };
    apply_preconditions(pair, params, q);
    return pair;
}

Corollary2Check check_corollary2(const Integer& k, const LucasParams& params, std::uint64_t q) {
    Corollary2Check out{params.shifted(k), false, check_theorem4(params.shifted(k), q)};
    out.discriminant_identity = out.shifted.discriminant() == params.discriminant();
    out.reports.first.label = "eq15";
    out.reports.second.label = "eq16";
    out.reports.first.k = k;
    out.reports.second.k = k;
    // The shifted discriminant equals the original one, so the Legendre
    // condition is the original one; the Q condition is k^2 + Pk + Q ≢ 0.
    apply_preconditions(out.reports, out.shifted, q);
    return out;
}

std::vector<CongruenceReport> survey_section31(std::uint64_t q) {
    require_odd_prime(q);
    if (q % 5 != 1 && q % 5 != 4) {
        throw DomainError("Lucas survey requires q ≡ ±1 (mod 5); got " + std::to_string(q));
    }
    static const char* const kLabels[4] = {"eq19", "eq20", "eq17", "eq18"};
    return survey(LucasParams::lucas(), q, kLabels);
}

std::vector<CongruenceReport> survey_section32(std::uint64_t q) {
    require_odd_prime(q);
    if (q % 8 != 1 && q % 8 != 7) {
        throw DomainError("Pell-Lucas survey requires q ≡ ±1 (mod 8); got " + std::to_string(q));
    }
    static const char* const kLabels[4] = {"eq23", "eq24", "eq21", "eq22"};
    return survey(LucasParams::pell_lucas(), q, kLabels);
}

LucasIdentity resultant_lucas_identity(const LucasParams& params, std::uint64_t q, std::uint64_t max_prime) {
    require_odd_prime(q);
    if (q > max_prime) {
        throw CapExceeded("prime " + std::to_string(q) + " exceeds the resultant range of " + std::to_string(max_prime));
    }
    const IntPolynomial f{params.q(), Integer(-params.p()), Integer(1)};
    LucasIdentity out;
    out.resultant = cyclotomic_style_resultant(f, q - 1, -1);
    out.closed_form = 1 + pow(params.q(), q - 1) - lucas_v_exact(q - 1, params);
    out.match = out.resultant == out.closed_form;
    return out;
}

}  // namespace resq
