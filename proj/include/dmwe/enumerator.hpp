// Closed-form codeword counts at wmin and 1.5*wmin, the per-pair records
// behind the 1.5*wmin total, the coset-view core-row formulation of the same
// quantity, and the truncated union bound on ML block error rate.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dmwe/code.hpp"
#include "dmwe/counts.hpp"
#include "dmwe/ring.hpp"

namespace dmwe {

// One summand of the 1.5*wmin count:
//   count = 2^(r + 2 + lambda_h + lambda_f_part + lambda_g_part - alpha).
struct PairRecord {
    std::uint32_t f_row = 0, g_row = 0;
    Monomial h, f_over_h, g_over_h;
    int lambda_h = 0;
    int lambda_f_part = 0;  // lambda over f/h, measured against the full f
    int lambda_g_part = 0;
    int alpha = 0;
    count_t count = 0;
};

struct WeightReport {
    unsigned m = 0, r = 0;
    std::uint64_t n = 0, k = 0;
    std::uint64_t w_min = 0;
    count_t a_min = 0;   // codewords of weight wmin
    count_t a_1p5 = 0;   // codewords of weight 1.5*wmin, = sum of pair counts
    std::vector<PairRecord> pairs;
};

// Sum of 2^(deg f + |lambda_f|) over the maximum-degree stratum.
count_t count_min_weight(const CodeSpec& spec);

// Full report. a_1p5 is 0 when r < 2 or no pair qualifies; codes with
// r = m are rejected (Err::unsupported) since 1.5*wmin is not an integer
// weight there.
WeightReport count_1p5(const CodeSpec& spec);

// Core row set of a maximum-degree row: rows above f_row whose support adds
// exactly one index to f_row's support, within the code. |K| = deg f + |lambda_f|.
std::vector<std::uint32_t> core_row_set(const CodeSpec& spec, std::uint32_t f_row);

// Coset-view count for one qualifying pair of maximum-degree rows:
//   2^(|K_f| + |K_g| - (r-2) - |K_f intersect K_g| - lambda_{f lcm g}(gcd)).
// The last term discounts the shared factor's freedom on variables outside
// both monomials; it vanishes whenever r = 2 or the monomial pair covers
// every smaller index, which includes all the worked examples this follows.
// Equals the PairRecord count for the same pair, computed without touching
// the orbit-view lambda/alpha machinery.
count_t count_pair_coset(const CodeSpec& spec, std::uint32_t f_row, std::uint32_t g_row);

// Q(x), the standard normal tail probability, via the complementary error
// function (relative error well under 1e-12 over the useful range).
double q_function(double x);

// Truncated union bound at each Eb/N0 point (dB): sum over w in
// {wmin, 1.5*wmin} of A_w * Q(sqrt(2 w R Eb/N0)). Nonincreasing in Eb/N0.
std::vector<double> union_bound(const WeightReport& report, double rate,
                                std::span<const double> ebn0_db);

}  // namespace dmwe
