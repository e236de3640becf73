// Decreasing monomial codes: construction from row indices or Reed-Muller
// parameters, degree strata, and the maximum-degree pair scan.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dmwe/ring.hpp"

namespace dmwe {

// Immutable after construction; safe to share across threads.
struct CodeSpec {
    unsigned m = 0;
    unsigned r = 0;                   // max degree over the generating set
    std::uint64_t n = 0;              // 2^m
    std::uint64_t k = 0;              // |I|
    std::uint64_t w_min = 0;          // 2^(m-r)
    std::vector<Monomial> monomials;  // sorted ascending by mask
    std::vector<std::uint32_t> rows;  // sorted ascending, bijective with monomials
    std::vector<std::uint32_t> closure_added_rows;  // rows added by non-strict ingestion

    std::vector<Monomial> stratum(unsigned degree) const;
    std::vector<Monomial> max_stratum() const { return stratum(r); }
    bool contains_row(std::uint32_t row) const;
    double rate() const { return static_cast<double>(k) / static_cast<double>(n); }
};

// strict = true rejects non-decreasing input (Err::not_decreasing, message
// names a witness); strict = false completes the set downward and records
// the added rows.
CodeSpec code_from_monomials(std::vector<Monomial> monomials, unsigned m, bool strict);
CodeSpec code_from_row_indices(std::span<const std::uint32_t> rows, unsigned m, bool strict);
CodeSpec reed_muller(unsigned r, unsigned m);

std::vector<std::uint32_t> to_row_indices(const CodeSpec& spec);

// One unordered pair per maximum-degree pair {f,g} with deg(gcd) = r-2.
// f is the member with the larger row index; pairs are sorted by f_row
// descending, then g_row descending.
struct MaxDegreePair {
    Monomial f, g, h;  // h = gcd(f, g)
    std::uint32_t f_row = 0, g_row = 0;
};
std::vector<MaxDegreePair> max_degree_pairs(const CodeSpec& spec);

// ev of every generating monomial, ordered by descending row index.
std::vector<Evaluation> generator_rows(const CodeSpec& spec);

}  // namespace dmwe
