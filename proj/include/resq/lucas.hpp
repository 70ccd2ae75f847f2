#pragma once

#include "resq/congruence.hpp"
#include "resq/integer.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace resq {

/// Parameters of the companion Lucas sequence V_0 = 2, V_1 = P,
/// V_i = P V_{i-1} - Q V_{i-2}.
class LucasParams {
public:
    LucasParams(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)), discriminant_(p_ * p_ - 4 * q_) {}

    /// Lucas numbers L_n.
    static LucasParams lucas() { return {1, -1}; }
    /// Pell-Lucas numbers.
    static LucasParams pell_lucas() { return {2, -1}; }

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    /// P^2 - 4Q
    const Integer& discriminant() const { return discriminant_; }

    /// Parameters (P + 2k, k^2 + Pk + Q) of the sequence with roots shifted by k.
    LucasParams shifted(const Integer& k) const { return {p_ + 2 * k, k * k + p_ * k + q_}; }

private:
    Integer p_;
    Integer q_;
    Integer discriminant_;
};

/// Default limit on n for lucas_v_exact.
inline constexpr std::uint64_t kDefaultExactCap = 10'000;

/// Exact V_n by iterating the recurrence. Throws CapExceeded past `cap`.
Integer lucas_v_exact(std::uint64_t n, const LucasParams& params, std::uint64_t cap = kDefaultExactCap);

/// V_n mod m (m >= 2) by fast doubling over (V_k, V_{k+1}, Q^k):
/// V_2k = V_k^2 - 2Q^k, V_{2k+1} = V_k V_{k+1} - P Q^k.
std::uint64_t lucas_v_mod(std::uint64_t n, const LucasParams& params, std::uint64_t m);

/// Legendre symbol (a/q) by Euler's criterion. q must be an odd prime.
int legendre(const Integer& a, std::uint64_t q);

struct CongruencePair {
    CongruenceReport first;
    CongruenceReport second;

    bool any_violated() const { return first.violated() || second.violated(); }
};

/**
 * V_{q-1} ≡ Q^(q-1) + 1 and V_{(q-1)/2}^2 ≡ (Q^((q-1)/2) + 1)^2 (mod q^2),
 * labelled "eq12" and "eq13". The preconditions Q ≢ 0 (mod q) and
 * (P^2 - 4Q / q) = 1 are reported, not thrown. Throws DomainError unless q
 * is an odd prime.
 */
CongruencePair check_theorem4(const LucasParams& params, std::uint64_t q);

struct Corollary2Check {
    LucasParams shifted;
    /// (P + 2k)^2 - 4(k^2 + Pk + Q) == P^2 - 4Q, checked exactly.
    bool discriminant_identity = false;
    /// Labelled "eq15" and "eq16"; both carry k.
    CongruencePair reports;
};

Corollary2Check check_corollary2(const Integer& k, const LucasParams& params, std::uint64_t q);

/// Lucas-number congruences for a prime q ≡ ±1 (mod 5): "eq19"/"eq20" at
/// k = 0, then "eq17"/"eq18" for every k in [0, q). Shifts with
/// k^2 + k - 1 ≡ 0 (mod q) are reported with preconditions_met = false.
std::vector<CongruenceReport> survey_section31(std::uint64_t q);

/// Pell-Lucas analogue for q ≡ ±1 (mod 8): "eq23"/"eq24", then "eq21"/"eq22".
std::vector<CongruenceReport> survey_section32(std::uint64_t q);

struct LucasIdentity {
    /// R(x^2 - Px + Q, x^(q-1) - 1) from the resultant engine.
    Integer resultant;
    /// 1 + Q^(q-1) - V_{q-1}(P, Q) from the exact recurrence.
    Integer closed_form;
    bool match = false;
};

/// Default upper bound on q for resultant_lucas_identity.
inline constexpr std::uint64_t kDefaultIdentityMaxPrime = 101;

LucasIdentity resultant_lucas_identity(const LucasParams& params, std::uint64_t q,
                                       std::uint64_t max_prime = kDefaultIdentityMaxPrime);

}  // namespace resq
