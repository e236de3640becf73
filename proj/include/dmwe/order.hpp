// The partial orders on squarefree monomials (divisibility, index shift, and
// their composition) plus decreasing-set tests and closure.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dmwe/ring.hpp"

namespace dmwe {

// f | g, i.e. the variable set of f is contained in g's.
bool divides_order(Monomial f, Monomial g);

// Equal-degree comparison: with both index lists sorted ascending, every
// index of f is at most the corresponding index of g. False when the
// degrees differ.
bool shift_order(Monomial f, Monomial g);

// The combined order: f is below g iff some divisor g* of g with
// deg(g*) = deg(f) dominates f in shift_order. Computed greedily against
// the top deg(f) indices of g, which dominate every other choice of g*.
bool preceq(Monomial f, Monomial g);

// A set is decreasing when it is closed downward under preceq.
bool is_decreasing(const std::vector<Monomial>& set, unsigned m);

// First violation found, as (g, f) with g preceq f, f in the set, g absent.
std::optional<std::pair<Monomial, Monomial>> decreasing_violation(
    const std::vector<Monomial>& set, unsigned m);

// Smallest decreasing superset, sorted ascending by mask. Idempotent.
std::vector<Monomial> decreasing_closure(std::vector<Monomial> set, unsigned m);

}  // namespace dmwe
