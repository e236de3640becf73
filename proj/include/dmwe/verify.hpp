// Formula-versus-oracle verification used by the verify command. A mismatch
// here means a bug somewhere and is reported loudly.
#pragma once

#include <string>
#include <vector>

#include "dmwe/code.hpp"
#include "dmwe/oracle.hpp"

namespace dmwe {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass = true;
};

// Runs the exhaustive spectrum against the closed-form counts, compares the
// orbit-built minimum-weight set and the pairwise-sum census against the
// exhaustive codeword sets, and cross-checks the per-pair counts against the
// core-row formulation. Throws Err::too_large when K exceeds the limits.
//
// Setting the environment variable DMWE_VERIFY_INJECT_FAULT perturbs one
// formula count so the mismatch reporting path itself can be exercised.
VerifyReport verify_code(const CodeSpec& spec, const OracleLimits& limits = {},
                         unsigned threads = 1);

}  // namespace dmwe
