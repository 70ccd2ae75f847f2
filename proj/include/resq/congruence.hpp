#pragma once

#include "resq/integer.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace resq {

/// Outcome of checking one congruence lhs ≡ rhs (mod q^modulus_power).
struct CongruenceReport {
    /// Which congruence: "theorem2", "theorem3_minus", "eq12", "eq17", ...
    std::string label;
    std::uint64_t q = 0;
    std::uint64_t modulus_power = 0;
    /// Both sides reduced into [0, q^modulus_power).
    Integer lhs;
    Integer rhs;
    /// lhs ≡ rhs; computed whether or not the preconditions hold.
    bool holds = false;
    bool preconditions_met = true;
    /// Why the preconditions fail; empty when they hold.
    std::string reason;
    /// Shift parameter for the shifted-sequence congruences.
    std::optional<Integer> k;

    /// A proven congruence that failed.
    bool violated() const { return preconditions_met && !holds; }
};

/// Reduces both sides modulo q^e and fills `holds`.
CongruenceReport make_congruence(std::string label, std::uint64_t q, std::uint64_t e, const Integer& lhs,
                                 const Integer& rhs);

}  // namespace resq
