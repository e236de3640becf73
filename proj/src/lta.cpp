#include "dmwe/lta.hpp"

#include <algorithm>

namespace dmwe {

int lambda_single(Monomial f, unsigned i) {
    const std::uint32_t below = (i >= 32) ? ~0u : ((1u << i) - 1u);
    return std::popcount(below & ~f.vars);
}

int lambda_total(Monomial f, Monomial g) {
    int total = 0;
    for (unsigned i : g.indices()) total += lambda_single(f, i);
    return total;
}

count_t orbit_cardinality(Monomial f) {
    return pow2_checked(static_cast<unsigned>(f.degree() + lambda_total(f, f)));
}

SubgroupShape SubgroupShape::of(Monomial base, unsigned m) {
    SubgroupShape shape;
    shape.base = base;
    shape.m = m;
    for (unsigned i : base.indices()) {
        for (unsigned j = 0; j < i; ++j)
            if (!base.contains(j)) shape.free_b.emplace_back(i, j);
    }
    shape.free_eps = base.indices();
    return shape;
}

Polynomial apply(const GroupElement& e, Monomial f) {
    // Product of the substituted linear forms, expanded with on-the-fly
    // GF(2) cancellation over term masks.
    std::vector<std::uint32_t> cur{0};  // the polynomial 1
    std::vector<std::uint32_t> next;
    for (unsigned i : f.indices()) {
        const std::uint32_t form_vars = (1u << i) | (i < e.row_bits.size() ? e.row_bits[i] : 0);
        const bool form_const = (e.eps >> i) & 1u;
        next.clear();
        next.reserve(cur.size() * (static_cast<std::size_t>(std::popcount(form_vars)) + 1));
        for (std::uint32_t t : cur) {
            for (unsigned v = 0; v < 32; ++v)
                if ((form_vars >> v) & 1u) next.push_back(t | (1u << v));
            if (form_const) next.push_back(t);
        }
        std::sort(next.begin(), next.end());
        cur.clear();
        for (std::size_t a = 0; a < next.size();) {
            std::size_t b = a;
            while (b < next.size() && next[b] == next[a]) ++b;
            if ((b - a) & 1u) cur.push_back(next[a]);
            a = b;
        }
    }
    std::vector<Monomial> terms;
    terms.reserve(cur.size());
    for (std::uint32_t t : cur) terms.push_back(Monomial{t});
    return Polynomial::from_terms(std::move(terms));
}

namespace {

// Assignment `bits` is read lexicographically: the first listed free
// position takes the most significant bit.
GroupElement element_from_assignment(const SubgroupShape& shape, std::uint64_t bits) {
    GroupElement e = GroupElement::identity(shape.m);
    const std::size_t total = shape.free_bit_count();
    std::size_t pos = 0;
    for (auto [i, j] : shape.free_b) {
        if ((bits >> (total - 1 - pos)) & 1u) e.row_bits[i] |= (1u << j);
        ++pos;
    }
    for (unsigned i : shape.free_eps) {
        if ((bits >> (total - 1 - pos)) & 1u) e.eps |= (1u << i);
        ++pos;
    }
    return e;
}

}  // namespace

void for_each_subgroup_element(Monomial g, unsigned m, const GroupCallback& fn) {
    const SubgroupShape shape = SubgroupShape::of(g, m);
    const std::size_t total = shape.free_bit_count();
    if (total > 40) throw Error(Err::too_large, "subgroup of " + g.str() + " has 2^" +
                                                    std::to_string(total) + " elements");
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << total); ++bits)
        fn(element_from_assignment(shape, bits));
}

std::vector<GroupElement> subgroup_elements(Monomial g, unsigned m) {
    std::vector<GroupElement> out;
    for_each_subgroup_element(g, m, [&](const GroupElement& e) { out.push_back(e); });
    return out;
}

void for_each_full_group_element(unsigned m, const GroupCallback& fn) {
    const unsigned b_bits = m * (m - 1) / 2;
    if (b_bits + m > 26)
        throw Error(Err::too_large, "full group enumeration is limited to tiny m");
    for (std::uint64_t bv = 0; bv < (std::uint64_t{1} << b_bits); ++bv) {
        GroupElement e = GroupElement::identity(m);
        unsigned pos = 0;
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < i; ++j, ++pos)
                if ((bv >> pos) & 1u) e.row_bits[i] |= (1u << j);
        for (std::uint32_t eps = 0; eps < (std::uint32_t{1} << m); ++eps) {
            e.eps = eps;
            fn(e);
        }
    }
}

OrbitStats orbit_with_stats(Monomial base, Monomial target, unsigned m) {
    if (!target.divides(base))
        throw Error(Err::non_divisor, target.str() + " does not divide " + base.str());
    // Only rows of `target` matter; the remaining free coordinates of the
    // base subgroup would replicate every polynomial without changing the set.
    SubgroupShape shape;
    shape.base = base;
    shape.m = m;
    for (unsigned i : target.indices())
        for (unsigned j = 0; j < i; ++j)
            if (!base.contains(j)) shape.free_b.emplace_back(i, j);
    shape.free_eps = target.indices();

    const std::size_t total = shape.free_bit_count();
    if (total > 30)
        throw Error(Err::too_large, "orbit of " + target.str() + " has 2^" +
                                        std::to_string(total) + " elements");
    OrbitStats stats;
    stats.set.reserve(std::size_t{1} << total);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << total); ++bits) {
        stats.set.insert(apply(element_from_assignment(shape, bits), target));
        ++stats.enumerated;
    }
    return stats;
}

PolySet orbit(Monomial base, Monomial target, unsigned m) {
    return orbit_with_stats(base, target, m).set;
}

}  // namespace dmwe
