#include "dmwe/order.hpp"

#include <algorithm>
#include <unordered_set>

namespace dmwe {

bool divides_order(Monomial f, Monomial g) { return f.divides(g); }

bool shift_order(Monomial f, Monomial g) {
    if (f.degree() != g.degree()) return false;
    const auto fi = f.indices();
    const auto gi = g.indices();
    for (std::size_t l = 0; l < fi.size(); ++l)
        if (fi[l] > gi[l]) return false;
    return true;
}

bool preceq(Monomial f, Monomial g) {
    const int s = f.degree();
    const int t = g.degree();
    if (s > t) return false;
    const auto fi = f.indices();
    const auto gi = g.indices();
    // The top-s indices of g dominate every other size-s divisor of g in
    // sorted elementwise order, so they are the only witness worth checking.
    for (int l = 0; l < s; ++l)
        if (fi[l] > gi[t - s + l]) return false;
    return true;
}

namespace {

// One-step predecessors of f under preceq: drop a variable, or shift one
// variable down to an unused smaller index. preceq is the reflexive
// transitive closure of these moves, so downward closure under them is
// equivalent to the decreasing property.
template <typename Fn>
void for_each_elementary_predecessor(Monomial f, Fn&& fn) {
    for (unsigned i : f.indices()) {
        const std::uint32_t without = f.vars & ~(1u << i);
        fn(Monomial{without});
        for (unsigned j = 0; j < i; ++j)
            if (!f.contains(j)) fn(Monomial{without | (1u << j)});
    }
}

}  // namespace

std::optional<std::pair<Monomial, Monomial>> decreasing_violation(
    const std::vector<Monomial>& set, unsigned) {
    std::unordered_set<std::uint32_t> have;
    for (Monomial f : set) have.insert(f.vars);
    for (Monomial f : set) {
        std::optional<std::pair<Monomial, Monomial>> found;
        for_each_elementary_predecessor(f, [&](Monomial g) {
            if (!found && !have.contains(g.vars)) found = {g, f};
        });
        if (found) return found;
    }
    return std::nullopt;
}

bool is_decreasing(const std::vector<Monomial>& set, unsigned m) {
    return !decreasing_violation(set, m).has_value();
}

std::vector<Monomial> decreasing_closure(std::vector<Monomial> set, unsigned m) {
    std::unordered_set<std::uint32_t> have;
    std::vector<Monomial> work = set;
    for (Monomial f : set) have.insert(f.vars);
    while (!work.empty()) {
        Monomial f = work.back();
        work.pop_back();
        for_each_elementary_predecessor(f, [&](Monomial g) {
            if (have.insert(g.vars).second) work.push_back(g);
        });
    }
    std::vector<Monomial> out;
    out.reserve(have.size());
    for (std::uint32_t v : have) out.push_back(Monomial{v});
    std::sort(out.begin(), out.end());
    (void)m;
    return out;
}

}  // namespace dmwe
