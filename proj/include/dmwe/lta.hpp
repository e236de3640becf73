// The lower triangular affine group LTA(m,2), its per-monomial
// stabilizer-free subgroups, group actions on monomials, and orbit
// enumeration. All enumeration is pure and safe to run concurrently.
#pragma once

#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "dmwe/counts.hpp"
#include "dmwe/ring.hpp"

namespace dmwe {

// Affine map x -> Bx + eps with B unit lower triangular over GF(2).
// row_bits[i] holds the off-diagonal bits b_{i,j} (bit j set, j < i);
// the unit diagonal is implicit.
struct GroupElement {
    unsigned m = 0;
    std::vector<std::uint32_t> row_bits;
    std::uint32_t eps = 0;

    static GroupElement identity(unsigned m) { return GroupElement{m, std::vector<std::uint32_t>(m, 0), 0}; }
};

// Free coordinates of the subgroup attached to `base`: row i is active iff
// i divides base, and within an active row only columns outside base are
// free. Positions are listed row-major (i ascending, j ascending), then the
// free translation bits (i ascending); streams enumerate assignments in
// lexicographic order over that listing.
struct SubgroupShape {
    Monomial base;
    unsigned m = 0;
    std::vector<std::pair<unsigned, unsigned>> free_b;  // (i, j) with j < i
    std::vector<unsigned> free_eps;

    static SubgroupShape of(Monomial base, unsigned m);
    std::size_t free_bit_count() const { return free_b.size() + free_eps.size(); }
};

// Number of indices j < i outside ind(f).
int lambda_single(Monomial f, unsigned i);

// Sum of lambda_single(f, i) over the variables of g.
int lambda_total(Monomial f, Monomial g);

// |orbit of f under its own subgroup| = 2^(deg f + lambda_total(f, f)).
count_t orbit_cardinality(Monomial f);

// Substitutes y_i = x_i + sum_j b_{i,j} x_j + eps_i for every variable of f
// and expands to reduced ANF.
Polynomial apply(const GroupElement& e, Monomial f);

using GroupCallback = std::function<void(const GroupElement&)>;

// Streams all 2^(deg g + |lambda_g|) elements of the subgroup attached to g.
void for_each_subgroup_element(Monomial g, unsigned m, const GroupCallback& fn);
std::vector<GroupElement> subgroup_elements(Monomial g, unsigned m);

// Streams the full group, all 2^(m(m-1)/2 + m) elements. Only sane for
// small m; used to confirm that subgroup orbits equal full-group orbits.
void for_each_full_group_element(unsigned m, const GroupCallback& fn);

using PolySet = std::unordered_set<Polynomial, PolynomialHash>;

// { e.target : e in subgroup of base }, deduplicated. Requires target | base.
// Enumeration is restricted to the rows of target (the other free bits of
// the subgroup cannot affect the result), so exactly
// 2^(deg target + lambda_total(base, target)) candidates are generated.
PolySet orbit(Monomial base, Monomial target, unsigned m);

// Same set plus the raw candidate count, for stabilizer-freeness checks.
struct OrbitStats {
    PolySet set;
    std::uint64_t enumerated = 0;
};
OrbitStats orbit_with_stats(Monomial base, Monomial target, unsigned m);

}  // namespace dmwe
