#include "dmwe/ring.hpp"

#include <algorithm>
#include <unordered_set>

namespace dmwe {

Monomial Monomial::of(std::initializer_list<unsigned> indices) {
    Monomial f;
    for (unsigned i : indices) f.vars |= (1u << i);
    return f;
}

std::vector<unsigned> Monomial::indices() const {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < 32; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string s;
    for (unsigned i : indices()) s += "x" + std::to_string(i);
    return s;
}

Monomial mono_gcd(Monomial f, Monomial g) { return Monomial{f.vars & g.vars}; }

Monomial mono_lcm(Monomial f, Monomial g) { return Monomial{f.vars | g.vars}; }

Monomial mono_divide(Monomial f, Monomial h) {
    if (!h.divides(f)) throw Error(Err::non_divisor, h.str() + " does not divide " + f.str());
    return Monomial{f.vars & ~h.vars};
}

std::uint32_t row_index_of(Monomial f, unsigned m) {
    return (~f.vars) & ((m == 32 ? ~0u : (1u << m) - 1u));
}

Monomial monomial_of_row(std::uint32_t row, unsigned m) {
    return Monomial{(~row) & ((m == 32 ? ~0u : (1u << m) - 1u))};
}

Polynomial Polynomial::from_terms(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end());
    std::vector<Monomial> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) & 1u) out.push_back(terms[i]);
        i = j;
    }
    Polynomial p;
    p.terms_ = std::move(out);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (Monomial t : terms_) d = std::max(d, t.degree());
    return d;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    // Symmetric difference of two sorted term lists.
    Polynomial out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::set_symmetric_difference(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                  b.terms_.end(), std::back_inserter(out.terms_));
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    // Full expansion: x_i^2 = x_i makes each pairwise product the union of
    // the variable masks; equal products cancel over GF(2).
    std::vector<Monomial> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (Monomial s : a.terms_)
        for (Monomial t : b.terms_) prods.push_back(Monomial{s.vars | t.vars});
    return Polynomial::from_terms(std::move(prods));
}

std::size_t Polynomial::hash() const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (Monomial t : terms_) {
        h ^= t.vars;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += it->str();
    }
    return s;
}

Evaluation Evaluation::zero(unsigned m) {
    const std::uint64_t n = std::uint64_t{1} << m;
    return Evaluation(m, std::vector<std::uint64_t>((n + 63) / 64, 0));
}

std::uint64_t Evaluation::weight() const {
    std::uint64_t w = 0;
    for (std::uint64_t word : words_) w += static_cast<std::uint64_t>(std::popcount(word));
    return w;
}

Evaluation& Evaluation::operator^=(const Evaluation& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

Evaluation& Evaluation::operator&=(const Evaluation& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

std::size_t Evaluation::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t word : words_) {
        h ^= word;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ m_);
}

std::string Evaluation::bit_string() const {
    std::string s;
    s.reserve(size());
    for (std::uint64_t p = 0; p < size(); ++p) s += bit(p) ? '1' : '0';
    return s;
}

Evaluation evaluate(Monomial f, unsigned m) {
    const std::uint64_t n = std::uint64_t{1} << m;
    std::vector<std::uint64_t> words((n + 63) / 64, 0);
    for (std::uint64_t p = 0; p < n; ++p) {
        const std::uint64_t point = n - 1 - p;
        if ((point & f.vars) == f.vars) words[p >> 6] |= std::uint64_t{1} << (p & 63u);
    }
    return Evaluation(m, std::move(words));
}

Evaluation evaluate(const Polynomial& p, unsigned m) {
    Evaluation out = Evaluation::zero(m);
    for (Monomial t : p.terms()) out ^= evaluate(t, m);
    return out;
}

}  // namespace dmwe
