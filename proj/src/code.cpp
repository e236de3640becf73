#include "dmwe/code.hpp"

#include <algorithm>
#include <unordered_set>

#include "dmwe/order.hpp"

namespace dmwe {

std::vector<Monomial> CodeSpec::stratum(unsigned degree) const {
    std::vector<Monomial> out;
    for (Monomial f : monomials)
        if (static_cast<unsigned>(f.degree()) == degree) out.push_back(f);
    return out;
}

bool CodeSpec::contains_row(std::uint32_t row) const {
    return std::binary_search(rows.begin(), rows.end(), row);
}

CodeSpec code_from_monomials(std::vector<Monomial> monomials, unsigned m, bool strict) {
    if (m < 1 || m > kMaxVars)
        throw Error(Err::argument, "m must be in [1, " + std::to_string(kMaxVars) + "]");
    if (monomials.empty()) throw Error(Err::argument, "empty generating set");
    for (Monomial f : monomials)
        if (f.vars >> m)
            throw Error(Err::index_range, "monomial " + f.str() + " uses variables beyond m=" + std::to_string(m));

    std::sort(monomials.begin(), monomials.end());
    if (std::adjacent_find(monomials.begin(), monomials.end()) != monomials.end())
        throw Error(Err::index_range, "duplicate generating monomial");

    CodeSpec spec;
    spec.m = m;
    if (strict) {
        if (auto viol = decreasing_violation(monomials, m)) {
            throw Error(Err::not_decreasing, "set is not decreasing: " + viol->first.str() +
                                                 " precedes " + viol->second.str() +
                                                 " but is missing (row " +
                                                 std::to_string(row_index_of(viol->first, m)) + ")");
        }
        spec.monomials = std::move(monomials);
    } else {
        std::unordered_set<std::uint32_t> given;
        for (Monomial f : monomials) given.insert(f.vars);
        spec.monomials = decreasing_closure(std::move(monomials), m);
        for (Monomial f : spec.monomials)
            if (!given.contains(f.vars))
                spec.closure_added_rows.push_back(row_index_of(f, m));
        std::sort(spec.closure_added_rows.begin(), spec.closure_added_rows.end());
    }

    spec.n = std::uint64_t{1} << m;
    spec.k = spec.monomials.size();
    spec.r = 0;
    for (Monomial f : spec.monomials)
        spec.r = std::max(spec.r, static_cast<unsigned>(f.degree()));
    spec.w_min = std::uint64_t{1} << (m - spec.r);
    spec.rows.reserve(spec.monomials.size());
    for (Monomial f : spec.monomials) spec.rows.push_back(row_index_of(f, m));
    std::sort(spec.rows.begin(), spec.rows.end());
    return spec;
}

CodeSpec code_from_row_indices(std::span<const std::uint32_t> rows, unsigned m, bool strict) {
    if (m < 1 || m > kMaxVars)
        throw Error(Err::argument, "m must be in [1, " + std::to_string(kMaxVars) + "]");
    const std::uint64_t n = std::uint64_t{1} << m;
    std::vector<Monomial> monomials;
    monomials.reserve(rows.size());
    for (std::uint32_t row : rows) {
        if (row >= n)
            throw Error(Err::index_range,
                        "row index " + std::to_string(row) + " out of [0, " + std::to_string(n) + ")");
        monomials.push_back(monomial_of_row(row, m));
    }
    return code_from_monomials(std::move(monomials), m, strict);
}

CodeSpec reed_muller(unsigned r, unsigned m) {
    if (m < 1 || m > kMaxVars)
        throw Error(Err::argument, "m must be in [1, " + std::to_string(kMaxVars) + "]");
    if (r > m) throw Error(Err::argument, "reed_muller needs r <= m");
    std::vector<Monomial> monomials;
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << m); ++v)
        if (static_cast<unsigned>(std::popcount(v)) <= r) monomials.push_back(Monomial{v});
    return code_from_monomials(std::move(monomials), m, true);
}

std::vector<std::uint32_t> to_row_indices(const CodeSpec& spec) { return spec.rows; }

std::vector<MaxDegreePair> max_degree_pairs(const CodeSpec& spec) {
    std::vector<MaxDegreePair> out;
    if (spec.r < 2) return out;
    const auto top = spec.max_stratum();
    for (std::size_t a = 0; a < top.size(); ++a) {
        for (std::size_t b = a + 1; b < top.size(); ++b) {
            Monomial f = top[a], g = top[b];
            Monomial h = mono_gcd(f, g);
            if (static_cast<unsigned>(h.degree()) != spec.r - 2) continue;
            std::uint32_t f_row = row_index_of(f, spec.m);
            std::uint32_t g_row = row_index_of(g, spec.m);
            if (f_row < g_row) {
                std::swap(f, g);
                std::swap(f_row, g_row);
            }
            out.push_back(MaxDegreePair{f, g, h, f_row, g_row});
        }
    }
    std::sort(out.begin(), out.end(), [](const MaxDegreePair& x, const MaxDegreePair& y) {
        if (x.f_row != y.f_row) return x.f_row > y.f_row;
        return x.g_row > y.g_row;
    });
    return out;
}

std::vector<Evaluation> generator_rows(const CodeSpec& spec) {
    // Descending row index, i.e. ascending monomial mask.
    std::vector<Evaluation> out;
    out.reserve(spec.monomials.size());
    for (Monomial f : spec.monomials) out.push_back(evaluate(f, spec.m));
    return out;
}

}  // namespace dmwe
