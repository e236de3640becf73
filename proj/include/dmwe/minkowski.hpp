// Minkowski sums of orbits: collision degree of coprime degree-2 parts,
// closed-form sum-set cardinalities, the full pair-set construction behind
// the 1.5*wmin codewords, and a sampling check of the subgroup reduction.
#pragma once

#include <cstdint>
#include <map>

#include "dmwe/counts.hpp"
#include "dmwe/lta.hpp"
#include "dmwe/ring.hpp"

namespace dmwe {

// A coprime pair of degree-2 monomials, canonicalized so that fpart holds
// the overall maximum variable index.
struct DegreeTwoPair {
    Monomial fpart, gpart;

    // Throws Err::not_degree_two / Err::not_coprime.
    static DegreeTwoPair make(Monomial a, Monomial b);

    // With fpart = x_{i1} x_{i2} (i1 < i2) and gpart = x_{j1} x_{j2}:
    // 0 for i2 > i1 > j2 > j1, 1 for i2 > j2 > i1 > j1, 2 for i2 > j2 > j1 > i1.
    // The three patterns are exhaustive for coprime canonical pairs.
    int collision_degree() const;
};

int collision_degree(Monomial f2, Monomial g2);

// |orbit(f) + orbit(g)| = |orbit(f)| * |orbit(g)| / 2^alpha for coprime
// degree-2 monomials.
count_t minkowski_cardinality(Monomial f2, Monomial g2);

// All pairwise ANF sums, deduplicated.
PolySet minkowski_sum_set(const PolySet& a, const PolySet& b);

// orbit(h,h) * (orbit(f,f/h) + orbit(g,g/h)) with h = gcd(f,g); the complete
// polynomial set whose evaluations are the 1.5*wmin codewords attached to
// the pair. Requires deg f = deg g and deg h = deg f - 2.
PolySet pair_set(Monomial f, Monomial g, unsigned m);

// Multiplicity histogram of the sums P + Q over orbit(f2) x orbit(g2),
// keyed by class size. Every class has size exactly 2^alpha.
std::map<std::uint64_t, std::uint64_t> collision_classes(Monomial f2, Monomial g2, unsigned m);

// Draws random full-group elements for the three factors of the pair-set
// product and checks that each sampled polynomial lands in pair_set(f,g).
struct SampleReport {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    bool pass() const { return failures == 0; }
};
SampleReport subgroup_reduction_sample_check(Monomial f, Monomial g, unsigned m,
                                             std::uint64_t trials, std::uint64_t seed);

}  // namespace dmwe
