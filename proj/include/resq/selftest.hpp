#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace resq {

struct SuiteOutcome {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    /// First failing case, shrunk where the suite supports it.
    std::string counterexample;

    bool passed() const { return failures == 0; }
};

struct SelftestOptions {
    std::uint64_t seed = 0x5eed'2011;
    /// Instances per randomized suite.
    std::size_t random_cases = 200;
};

/// Runs the worked-example fixtures and every algebraic property suite at desk
/// scale. Deterministic for a given seed.
std::vector<SuiteOutcome> run_selftest(const SelftestOptions& options = {});

}  // namespace resq
