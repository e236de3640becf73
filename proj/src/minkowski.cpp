#include "dmwe/minkowski.hpp"

#include <random>
#include <unordered_map>

namespace dmwe {

DegreeTwoPair DegreeTwoPair::make(Monomial a, Monomial b) {
    if (a.degree() != 2 || b.degree() != 2)
        throw Error(Err::not_degree_two, "collision degree needs two degree-2 monomials, got " +
                                             a.str() + " and " + b.str());
    if (mono_gcd(a, b).vars != 0)
        throw Error(Err::not_coprime, a.str() + " and " + b.str() + " share a variable");
    const auto ai = a.indices();
    const auto bi = b.indices();
    if (ai[1] > bi[1]) return DegreeTwoPair{a, b};
    return DegreeTwoPair{b, a};
}

int DegreeTwoPair::collision_degree() const {
    const unsigned i1 = fpart.indices()[0];
    const auto gi = gpart.indices();
    const unsigned j1 = gi[0], j2 = gi[1];
    if (i1 > j2) return 0;  // i2 > i1 > j2 > j1
    if (i1 > j1) return 1;  // i2 > j2 > i1 > j1
    return 2;               // i2 > j2 > j1 > i1
}

int collision_degree(Monomial f2, Monomial g2) {
    return DegreeTwoPair::make(f2, g2).collision_degree();
}

count_t minkowski_cardinality(Monomial f2, Monomial g2) {
    const int alpha = collision_degree(f2, g2);
    const int exp_f = f2.degree() + lambda_total(f2, f2);
    const int exp_g = g2.degree() + lambda_total(g2, g2);
    return pow2_checked(static_cast<unsigned>(exp_f + exp_g - alpha));
}

PolySet minkowski_sum_set(const PolySet& a, const PolySet& b) {
    PolySet out;
    out.reserve(a.size() * b.size());
    for (const Polynomial& p : a)
        for (const Polynomial& q : b) out.insert(p + q);
    return out;
}

namespace {

void require_qualifying_pair(Monomial f, Monomial g, Monomial h) {
    if (f == g) throw Error(Err::bad_pair, "pair needs two distinct monomials");
    if (f.degree() != g.degree())
        throw Error(Err::bad_pair, "pair needs equal degrees, got " + f.str() + ", " + g.str());
    if (h.degree() != f.degree() - 2)
        throw Error(Err::bad_pair, "gcd(" + f.str() + ", " + g.str() + ") = " + h.str() +
                                       " must have degree deg(f) - 2");
}

}  // namespace

PolySet pair_set(Monomial f, Monomial g, unsigned m) {
    const Monomial h = mono_gcd(f, g);
    require_qualifying_pair(f, g, h);
    const Monomial foh = mono_divide(f, h);
    const Monomial goh = mono_divide(g, h);

    const PolySet orbit_h = orbit(h, h, m);
    const PolySet sums = minkowski_sum_set(orbit(f, foh, m), orbit(g, goh, m));

    PolySet out;
    out.reserve(orbit_h.size() * sums.size());
    for (const Polynomial& hp : orbit_h)
        for (const Polynomial& s : sums) out.insert(hp * s);
    return out;
}

std::map<std::uint64_t, std::uint64_t> collision_classes(Monomial f2, Monomial g2, unsigned m) {
    (void)collision_degree(f2, g2);  // validates degree-2 and coprimality
    const PolySet of = orbit(f2, f2, m);
    const PolySet og = orbit(g2, g2, m);
    std::unordered_map<Polynomial, std::uint64_t, PolynomialHash> multiplicity;
    multiplicity.reserve(of.size() * og.size());
    for (const Polynomial& p : of)
        for (const Polynomial& q : og) ++multiplicity[p + q];
    std::map<std::uint64_t, std::uint64_t> histogram;
    for (const auto& [sum, count] : multiplicity) ++histogram[count];
    return histogram;
}

namespace {

GroupElement random_full_group_element(unsigned m, std::mt19937_64& rng) {
    GroupElement e = GroupElement::identity(m);
    for (unsigned i = 1; i < m; ++i)
        e.row_bits[i] = static_cast<std::uint32_t>(rng()) & ((1u << i) - 1u);
    e.eps = static_cast<std::uint32_t>(rng()) & ((m == 32 ? ~0u : (1u << m) - 1u));
    return e;
}

}  // namespace

SampleReport subgroup_reduction_sample_check(Monomial f, Monomial g, unsigned m,
                                             std::uint64_t trials, std::uint64_t seed) {
    const Monomial h = mono_gcd(f, g);
    require_qualifying_pair(f, g, h);
    const Monomial foh = mono_divide(f, h);
    const Monomial goh = mono_divide(g, h);
    const PolySet target = pair_set(f, g, m);

    std::mt19937_64 rng(seed);
    SampleReport report;
    report.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Polynomial hp = apply(random_full_group_element(m, rng), h);
        const Polynomial p1 = apply(random_full_group_element(m, rng), foh);
        const Polynomial p2 = apply(random_full_group_element(m, rng), goh);
        const Polynomial candidate = hp * (p1 + p2);
        if (!target.contains(candidate)) ++report.failures;
    }
    return report;
}

}  // namespace dmwe
