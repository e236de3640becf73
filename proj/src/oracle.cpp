#include "dmwe/oracle.hpp"

#include <algorithm>
#include <thread>

#include "dmwe/enumerator.hpp"
#include "dmwe/lta.hpp"

namespace dmwe {

namespace {

std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

// Spectrum of one contiguous Gray segment [begin, end), seeded with the
// codeword of gray(begin). Counts land in a dense per-weight array.
void sweep_segment(const std::vector<Evaluation>& rows, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::uint64_t>& counts) {
    const unsigned m = rows.front().m();
    Evaluation cw = Evaluation::zero(m);
    std::uint64_t message = gray(begin);
    for (unsigned b = 0; b < rows.size(); ++b)
        if ((message >> b) & 1u) cw ^= rows[b];
    ++counts[cw.weight()];
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        const std::uint64_t flipped = gray(i - 1) ^ gray(i);  // single bit
        cw ^= rows[static_cast<unsigned>(std::countr_zero(flipped))];
        ++counts[cw.weight()];
    }
}

unsigned resolve_threads(unsigned threads, std::uint64_t work) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t max_useful = std::max<std::uint64_t>(1, work >> 14);
    return static_cast<unsigned>(std::min<std::uint64_t>(threads, max_useful));
}

}  // namespace

Spectrum brute_force_spectrum(const CodeSpec& spec, const OracleLimits& limits, unsigned threads) {
    if (spec.k > limits.k_limit)
        throw Error(Err::too_large, "K = " + std::to_string(spec.k) + " exceeds k_limit = " +
                                        std::to_string(limits.k_limit));
    if (spec.m > limits.max_m)
        throw Error(Err::too_large, "m = " + std::to_string(spec.m) + " exceeds the oracle cap of " +
                                        std::to_string(limits.max_m));
    const std::vector<Evaluation> rows = generator_rows(spec);
    const std::uint64_t total = std::uint64_t{1} << spec.k;

    Spectrum spectrum;
    spectrum.n = spec.n;
    spectrum.k = spec.k;

    const unsigned workers = resolve_threads(threads, total);
    std::vector<std::vector<std::uint64_t>> partials(workers,
                                                     std::vector<std::uint64_t>(spec.n + 1, 0));
    if (workers <= 1) {
        sweep_segment(rows, 0, total, partials[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = w * chunk;
            const std::uint64_t end = std::min(total, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back([&rows, begin, end, &slot = partials[w]] {
                sweep_segment(rows, begin, end, slot);
            });
        }
        for (auto& t : pool) t.join();
    }
    for (const auto& partial : partials)
        for (std::uint64_t w = 0; w <= spec.n; ++w)
            if (partial[w] != 0) spectrum.counts[w] += partial[w];
    return spectrum;
}

EvalSet brute_force_weight_class(const CodeSpec& spec, std::uint64_t weight,
                                 const OracleLimits& limits) {
    if (spec.k > limits.k_limit)
        throw Error(Err::too_large, "K = " + std::to_string(spec.k) + " exceeds k_limit = " +
                                        std::to_string(limits.k_limit));
    if (spec.m > limits.max_m)
        throw Error(Err::too_large, "m = " + std::to_string(spec.m) + " exceeds the oracle cap of " +
                                        std::to_string(limits.max_m));
    const std::vector<Evaluation> rows = generator_rows(spec);
    const std::uint64_t total = std::uint64_t{1} << spec.k;
    EvalSet out;
    Evaluation cw = Evaluation::zero(spec.m);
    if (weight == 0) out.insert(cw);
    for (std::uint64_t i = 1; i < total; ++i) {
        const std::uint64_t flipped = gray(i - 1) ^ gray(i);
        cw ^= rows[static_cast<unsigned>(std::countr_zero(flipped))];
        if (cw.weight() == weight) {
            if (out.size() >= limits.orbit_cap)
                throw Error(Err::too_large, "weight class exceeds the configured cap");
            out.insert(cw);
        }
    }
    return out;
}

EvalSet min_weight_set(const CodeSpec& spec, const OracleLimits& limits) {
    if (spec.m > limits.max_m)
        throw Error(Err::too_large, "m = " + std::to_string(spec.m) + " exceeds the oracle cap of " +
                                        std::to_string(limits.max_m));
    const count_t expected = count_min_weight(spec);
    if (expected > limits.orbit_cap)
        throw Error(Err::too_large, "minimum-weight set has " + dec_string(expected) +
                                        " codewords, above the cap of " +
                                        std::to_string(limits.orbit_cap));
    EvalSet out;
    out.reserve(static_cast<std::size_t>(expected));
    for (Monomial f : spec.max_stratum())
        for (const Polynomial& p : orbit(f, f, spec.m)) out.insert(evaluate(p, spec.m));
    return out;
}

Census one_five_census(const CodeSpec& spec, const OracleLimits& limits) {
    const EvalSet min_set = min_weight_set(spec, limits);
    if (min_set.size() > limits.census_cap)
        throw Error(Err::too_large, "pairwise census over " + std::to_string(min_set.size()) +
                                        " minimum-weight codewords exceeds the cap of " +
                                        std::to_string(limits.census_cap));
    const std::vector<Evaluation> minimal(min_set.begin(), min_set.end());
    Census census;
    if (spec.r >= spec.m) return census;  // 1.5*wmin is not an integer weight
    const std::uint64_t target = 3 * (spec.w_min >> 1);
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        for (std::size_t b = a + 1; b < minimal.size(); ++b) {
            Evaluation sum = minimal[a] ^ minimal[b];
            if (sum.weight() == target) census.codewords.insert(std::move(sum));
        }
    }
    census.count = census.codewords.size();
    return census;
}

}  // namespace dmwe
