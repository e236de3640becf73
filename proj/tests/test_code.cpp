#include <algorithm>
#include <vector>

#include <doctest.h>

#include "dmwe/code.hpp"
#include "dmwe/order.hpp"

using namespace dmwe;

namespace {

const std::vector<std::uint32_t> kPolar128Rows{112, 104, 100, 98, 97, 88, 84};

// GF(2) row rank by elimination over the evaluation words.
std::size_t gf2_rank(std::vector<Evaluation> rows) {
    std::size_t rank = 0;
    const std::size_t bits = rows.empty() ? 0 : rows.front().size();
    for (std::size_t col = 0; col < bits && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].bit(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].bit(col)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("row ingestion with closure recovers the degree-4 stratum") {
    const CodeSpec spec = code_from_row_indices(kPolar128Rows, 7, false);
    const auto top = spec.max_stratum();
    const std::vector<Monomial> expected{
        Monomial::of({0, 1, 2, 3}), Monomial::of({0, 1, 2, 4}), Monomial::of({0, 1, 3, 4}),
        Monomial::of({0, 2, 3, 4}), Monomial::of({1, 2, 3, 4}), Monomial::of({0, 1, 2, 5}),
        Monomial::of({0, 1, 3, 5})};
    CHECK(top.size() == expected.size());
    for (Monomial f : expected) CHECK(std::find(top.begin(), top.end(), f) != top.end());
    CHECK(spec.r == 4);
    CHECK(spec.w_min == 8);
    CHECK(is_decreasing(spec.monomials, 7));
    CHECK_FALSE(spec.closure_added_rows.empty());
}

TEST_CASE("full code from rows") {
    const CodeSpec spec = code_from_row_indices(std::vector<std::uint32_t>{3, 2, 1, 0}, 2, true);
    CHECK(spec.k == 4);
    CHECK(spec.r == 2);
    CHECK(spec.monomials == std::vector<Monomial>{Monomial{}, Monomial::of({0}), Monomial::of({1}),
                                                  Monomial::of({0, 1})});
}

TEST_CASE("strict mode rejects non-decreasing input") {
    CHECK_THROWS_WITH_AS(code_from_row_indices(std::vector<std::uint32_t>{0}, 2, true),
                         doctest::Contains("not decreasing"), Error);
    try {
        code_from_row_indices(std::vector<std::uint32_t>{0}, 2, true);
    } catch (const Error& e) {
        CHECK(e.code() == Err::not_decreasing);
    }
    CHECK_THROWS_AS(code_from_row_indices(std::vector<std::uint32_t>{4}, 2, true), Error);
    CHECK_THROWS_AS(code_from_row_indices(std::vector<std::uint32_t>{1, 1}, 2, true), Error);
}

TEST_CASE("reed muller dimensions") {
    const CodeSpec rm37 = reed_muller(3, 7);
    CHECK(rm37.k == 64);
    CHECK(rm37.stratum(3).size() == 35);
    CHECK(rm37.w_min == 16);
    for (unsigned j = 0; j <= 3; ++j) {
        std::uint64_t binom = 1;
        for (unsigned i = 0; i < j; ++i) binom = binom * (7 - i) / (i + 1);
        CHECK(rm37.stratum(j).size() == binom);
    }

    CHECK(reed_muller(5, 5).k == 32);
    const CodeSpec repetition = reed_muller(0, 6);
    CHECK(repetition.k == 1);
    CHECK(repetition.w_min == 64);

    // the degree-3 stratum as rows runs from 15 up to 120
    std::vector<std::uint32_t> top_rows;
    for (Monomial f : rm37.stratum(3)) top_rows.push_back(row_index_of(f, 7));
    std::sort(top_rows.begin(), top_rows.end());
    CHECK(top_rows.front() == 15);
    CHECK(top_rows.back() == 120);
    CHECK(std::binary_search(top_rows.begin(), top_rows.end(), 116));
    CHECK(std::binary_search(top_rows.begin(), top_rows.end(), 23));
}

TEST_CASE("row round trip") {
    const CodeSpec spec = code_from_row_indices(kPolar128Rows, 7, false);
    auto rows = to_row_indices(spec);
    CHECK(std::is_sorted(rows.begin(), rows.end()));
    const CodeSpec again = code_from_row_indices(rows, 7, true);
    CHECK(again.monomials == spec.monomials);
    CHECK(to_row_indices(again) == rows);
}

TEST_CASE("maximum-degree pair scan reproduces the qualifying pairs in order") {
    const CodeSpec spec = code_from_row_indices(kPolar128Rows, 7, false);
    const auto pairs = max_degree_pairs(spec);
    REQUIRE(pairs.size() == 6);
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> expected{
        {104, 84}, {100, 88}, {98, 88}, {98, 84}, {97, 88}, {97, 84}};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        CHECK(pairs[i].f_row == expected[i].first);
        CHECK(pairs[i].g_row == expected[i].second);
        CHECK(pairs[i].h == mono_gcd(pairs[i].f, pairs[i].g));
        CHECK(pairs[i].h.degree() == 2);
    }
}

TEST_CASE("pair scan edge cases") {
    // shared factor of degree 3 > r-2: no qualifying pair
    const CodeSpec two = code_from_row_indices(std::vector<std::uint32_t>{112, 104}, 7, false);
    CHECK(max_degree_pairs(two).empty());

    const CodeSpec single = code_from_row_indices(std::vector<std::uint32_t>{112}, 7, false);
    CHECK(max_degree_pairs(single).empty());

    CHECK(max_degree_pairs(reed_muller(1, 4)).empty());  // r < 2
}

TEST_CASE("generator rows") {
    const CodeSpec full = code_from_row_indices(std::vector<std::uint32_t>{0, 1, 2, 3}, 2, true);
    const auto rows = generator_rows(full);
    REQUIRE(rows.size() == 4);
    // descending row index: rows 3, 2, 1, 0
    CHECK(rows[0].bit_string() == "1111");
    CHECK(rows[1].bit_string() == "1010");
    CHECK(rows[2].bit_string() == "1100");
    CHECK(rows[3].bit_string() == "1000");

    CHECK(generator_rows(reed_muller(0, 4)).front().weight() == 16);

    const CodeSpec rm25 = reed_muller(2, 5);
    CHECK(gf2_rank(generator_rows(rm25)) == rm25.k);
}
