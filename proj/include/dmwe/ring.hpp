// Arithmetic in R_m = F2[x_0..x_{m-1}]/(x_i^2 - x_i): squarefree monomials,
// ANF polynomials, evaluations over F_2^m, and the monomial <-> row-index map.
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "dmwe/errors.hpp"

namespace dmwe {

inline constexpr unsigned kMaxVars = 30;

// A squarefree monomial: bit i of `vars` set iff x_i divides it. The empty
// mask is the constant monomial 1.
struct Monomial {
    std::uint32_t vars = 0;

    constexpr int degree() const { return std::popcount(vars); }
    constexpr bool contains(unsigned i) const { return (vars >> i) & 1u; }
    constexpr bool divides(Monomial g) const { return (vars & g.vars) == vars; }
    constexpr bool is_one() const { return vars == 0; }

    static Monomial of(std::initializer_list<unsigned> indices);
    std::vector<unsigned> indices() const;  // ascending
    std::string str() const;                // "x0x2x4", "1" for the constant

    friend constexpr auto operator<=>(Monomial a, Monomial b) = default;
};

Monomial mono_gcd(Monomial f, Monomial g);
Monomial mono_lcm(Monomial f, Monomial g);
Monomial mono_divide(Monomial f, Monomial h);  // Err::non_divisor unless h | f

// Row index of the generator matrix whose row evaluates ev(f): the m-bit
// complement of the variable mask.
std::uint32_t row_index_of(Monomial f, unsigned m);
Monomial monomial_of_row(std::uint32_t row, unsigned m);

// ANF polynomial over GF(2). Canonical form: term masks sorted ascending,
// no duplicates. Equality and hashing use the canonical form.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(Monomial f) : terms_{f} {}
    static Polynomial one() { return Polynomial(Monomial{}); }

    // Normalizes: sorts and cancels duplicate terms pairwise.
    static Polynomial from_terms(std::vector<Monomial> terms);

    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // degree of the zero polynomial is -1

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    std::size_t hash() const;
    std::string str() const;  // terms joined by " + ", highest mask first; "0" if empty

  private:
    std::vector<Monomial> terms_;
};

struct PolynomialHash {
    std::size_t operator()(const Polynomial& p) const { return p.hash(); }
};

// ev(P) over all points of F_2^m. Bit p holds the value at the point whose
// integer encoding is N-1-p, with x_0 the least significant bit of the
// encoding. This matches a generator matrix built from ev rows.
class Evaluation {
  public:
    Evaluation() = default;
    Evaluation(unsigned m, std::vector<std::uint64_t> words) : m_(m), words_(std::move(words)) {}
    static Evaluation zero(unsigned m);

    unsigned m() const { return m_; }
    std::uint64_t size() const { return std::uint64_t{1} << m_; }
    bool bit(std::uint64_t p) const { return (words_[p >> 6] >> (p & 63u)) & 1u; }
    std::uint64_t weight() const;
    const std::vector<std::uint64_t>& words() const { return words_; }

    Evaluation& operator^=(const Evaluation& o);
    Evaluation& operator&=(const Evaluation& o);
    friend Evaluation operator^(Evaluation a, const Evaluation& b) { return a ^= b; }
    friend Evaluation operator&(Evaluation a, const Evaluation& b) { return a &= b; }
    friend bool operator==(const Evaluation& a, const Evaluation& b) = default;

    std::size_t hash() const;
    std::string bit_string() const;  // "1010" in position order p = 0..N-1

  private:
    unsigned m_ = 0;
    std::vector<std::uint64_t> words_;
};

struct EvaluationHash {
    std::size_t operator()(const Evaluation& e) const { return e.hash(); }
};

Evaluation evaluate(Monomial f, unsigned m);
Evaluation evaluate(const Polynomial& p, unsigned m);

}  // namespace dmwe
