// Independent brute-force ground truth: exhaustive weight spectra over all
// 2^K codewords, explicit minimum-weight codeword sets built from orbits,
// and the pairwise-sum census of 1.5*wmin codewords.
#pragma once

#include <cstdint>
#include <map>
#include <unordered_set>
#include <vector>

#include "dmwe/code.hpp"
#include "dmwe/counts.hpp"
#include "dmwe/ring.hpp"

namespace dmwe {

struct OracleLimits {
    unsigned k_limit = 24;  // max dimension for full 2^K sweeps
    unsigned max_m = 11;    // evaluations capped at 2^11 bits
    std::uint64_t orbit_cap = std::uint64_t{1} << 20;   // max total min-weight codewords
    std::uint64_t census_cap = std::uint64_t{1} << 16;  // census squares this many words
};

struct Spectrum {
    std::uint64_t n = 0, k = 0;
    std::map<std::uint64_t, std::uint64_t> counts;  // weight -> exact count

    std::uint64_t at(std::uint64_t weight) const {
        auto it = counts.find(weight);
        return it == counts.end() ? 0 : it->second;
    }
};

// Exact weight distribution over all 2^K codewords. Messages are walked in
// Gray-code order so each codeword is one generator-row XOR away from its
// predecessor. threads = 0 picks the hardware count; the message space is
// split into contiguous Gray segments, each seeded with its first codeword,
// and partial spectra are merged, so the result is partition independent.
Spectrum brute_force_spectrum(const CodeSpec& spec, const OracleLimits& limits = {},
                              unsigned threads = 1);

using EvalSet = std::unordered_set<Evaluation, EvaluationHash>;

// All codewords of one exact weight, by exhaustive sweep.
EvalSet brute_force_weight_class(const CodeSpec& spec, std::uint64_t weight,
                                 const OracleLimits& limits = {});

// Union of the maximum-degree orbits, evaluated. Size equals the closed-form
// minimum-weight count; every member has weight wmin.
EvalSet min_weight_set(const CodeSpec& spec, const OracleLimits& limits = {});

// XOR sums of distinct minimum-weight codewords that land on weight
// 1.5*wmin, deduplicated.
struct Census {
    std::uint64_t count = 0;
    EvalSet codewords;
};
Census one_five_census(const CodeSpec& spec, const OracleLimits& limits = {});

}  // namespace dmwe
