// Shared test helpers: random decreasing codes and a direct (non
// incremental) codeword sweep used as the oracle for the oracle.
#pragma once

#include <random>
#include <set>

#include "dmwe/code.hpp"
#include "dmwe/oracle.hpp"

namespace dmwe::testutil {

// Random decreasing code over m variables with K <= k_max and 2 <= r < m.
// Draws a few seed monomials and closes downward; retries until it fits.
inline CodeSpec random_decreasing_code(std::mt19937_64& rng, unsigned m, std::uint64_t k_max) {
    for (;;) {
        std::set<std::uint32_t> seed_masks;
        const int nseeds = 1 + static_cast<int>(rng() % 2);
        for (int s = 0; s < nseeds; ++s) {
            const unsigned deg = 2 + static_cast<unsigned>(rng() % (m - 2));
            std::uint32_t mask = 0;
            while (static_cast<unsigned>(std::popcount(mask)) < deg)
                mask |= 1u << (rng() % m);
            seed_masks.insert(mask);
        }
        std::vector<Monomial> seeds;
        for (std::uint32_t mask : seed_masks) seeds.push_back(Monomial{mask});
        CodeSpec spec = code_from_monomials(seeds, m, false);
        if (spec.k <= k_max && spec.r >= 2 && spec.r < m) return spec;
    }
}

// Weight spectrum by encoding every message from scratch; independent of the
// Gray-code walk in the library.
inline Spectrum direct_spectrum(const CodeSpec& spec) {
    const auto rows = generator_rows(spec);
    Spectrum out;
    out.n = spec.n;
    out.k = spec.k;
    for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << spec.k); ++msg) {
        Evaluation cw = Evaluation::zero(spec.m);
        for (unsigned b = 0; b < rows.size(); ++b)
            if ((msg >> b) & 1u) cw ^= rows[b];
        ++out.counts[cw.weight()];
    }
    return out;
}

}  // namespace dmwe::testutil
