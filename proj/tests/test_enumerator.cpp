#include <cmath>
#include <vector>

#include <doctest.h>

#include "dmwe/enumerator.hpp"
#include "dmwe/lta.hpp"

using namespace dmwe;

namespace {

const std::vector<std::uint32_t> kPolar128Rows{112, 104, 100, 98, 97, 88, 84};

std::uint64_t as_u64(count_t v) { return static_cast<std::uint64_t>(v); }

CodeSpec polar128() { return code_from_row_indices(kPolar128Rows, 7, false); }

// Independent Q oracle: Q(x) = phi(x) * int_0^U exp(-x u - u^2/2) du by
// composite Simpson in long double. The factored form keeps the quadrature
// error relative even deep in the tail.
long double q_reference(long double x) {
    constexpr long double inv_sqrt_2pi = 0.3989422804014326779399460599343819L;
    const int n = 1 << 19;
    const long double upper = 30.0L;
    const long double h = upper / n;
    auto g = [&](long double u) { return std::exp(-x * u - u * u / 2.0L); };
    long double sum = g(0.0L) + g(upper);
    for (int i = 1; i < n; ++i) sum += g(h * i) * ((i & 1) ? 4.0L : 2.0L);
    return inv_sqrt_2pi * std::exp(-x * x / 2.0L) * sum * h / 3.0L;
}

}  // namespace

TEST_CASE("minimum-weight counts") {
    std::vector<std::uint32_t> example_rows;
    for (Monomial f : {Monomial::of({0, 1, 2, 3}), Monomial::of({0, 1, 2, 4}),
                       Monomial::of({0, 1, 2, 5}), Monomial::of({0, 1, 3, 4})})
        example_rows.push_back(row_index_of(f, 8));
    const CodeSpec example5 = code_from_row_indices(example_rows, 8, false);
    CHECK(as_u64(count_min_weight(example5)) == 176);

    CHECK(as_u64(count_min_weight(polar128())) == 688);
    CHECK(as_u64(count_min_weight(reed_muller(3, 7))) == 94488);
    CHECK(as_u64(count_min_weight(reed_muller(0, 5))) == 1);
}

TEST_CASE("1.5*wmin report for the (128,64) code") {
    const WeightReport report = count_1p5(polar128());
    CHECK(report.w_min == 8);
    CHECK(as_u64(report.a_min) == 688);
    CHECK(as_u64(report.a_1p5) == 5376);
    REQUIRE(report.pairs.size() == 6);

    // f_row, g_row, lambda_h, lambda_f_part, lambda_g_part, alpha, count
    struct Row {
        std::uint32_t f_row, g_row;
        int lh, lf, lg, alpha;
        std::uint64_t count;
    };
    const std::vector<Row> expected{
        {104, 84, 0, 1, 3, 1, 512},  {100, 88, 0, 2, 2, 2, 256}, {98, 88, 1, 2, 2, 2, 512},
        {98, 84, 2, 2, 2, 2, 1024},  {97, 88, 2, 2, 2, 2, 1024}, {97, 84, 3, 2, 2, 2, 2048}};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const PairRecord& rec = report.pairs[i];
        CHECK(rec.f_row == expected[i].f_row);
        CHECK(rec.g_row == expected[i].g_row);
        CHECK(rec.lambda_h == expected[i].lh);
        CHECK(rec.lambda_f_part == expected[i].lf);
        CHECK(rec.lambda_g_part == expected[i].lg);
        CHECK(rec.alpha == expected[i].alpha);
        CHECK(as_u64(rec.count) == expected[i].count);
        const unsigned exponent = static_cast<unsigned>(
            static_cast<int>(report.r) + 2 + rec.lambda_h + rec.lambda_f_part +
            rec.lambda_g_part - rec.alpha);
        CHECK(rec.count == pow2_checked(exponent));
    }
}

TEST_CASE("1.5*wmin totals for the reduced constructions") {
    const CodeSpec mid =
        code_from_row_indices(std::vector<std::uint32_t>{112, 104, 100, 98, 88}, 7, false);
    const WeightReport mid_report = count_1p5(mid);
    CHECK(as_u64(mid_report.a_min) == 304);
    CHECK(as_u64(mid_report.a_1p5) == 768);

    const CodeSpec small = code_from_row_indices(std::vector<std::uint32_t>{112, 104}, 7, false);
    const WeightReport small_report = count_1p5(small);
    CHECK(as_u64(small_report.a_min) == 48);
    CHECK(as_u64(small_report.a_1p5) == 0);
    CHECK(small_report.pairs.empty());
}

TEST_CASE("degenerate degrees") {
    CHECK(as_u64(count_1p5(reed_muller(0, 5)).a_1p5) == 0);  // r < 2
    CHECK(as_u64(count_1p5(reed_muller(1, 5)).a_1p5) == 0);
    CHECK_THROWS_AS(count_1p5(reed_muller(2, 2)), Error);  // r = m rejected
    try {
        count_1p5(reed_muller(3, 3));
    } catch (const Error& e) {
        CHECK(e.code() == Err::unsupported);
    }
}

TEST_CASE("counts depend only on the maximum-degree stratum") {
    const CodeSpec base = polar128();
    auto rows = kPolar128Rows;
    rows.push_back(row_index_of(Monomial::of({6}), 7));
    rows.push_back(row_index_of(Monomial::of({5, 6}), 7));
    const CodeSpec padded = code_from_row_indices(rows, 7, false);
    CHECK(padded.k > base.k);
    CHECK(count_min_weight(padded) == count_min_weight(base));
    const WeightReport a = count_1p5(base);
    const WeightReport b = count_1p5(padded);
    CHECK(a.a_1p5 == b.a_1p5);
    REQUIRE(a.pairs.size() == b.pairs.size());
    for (std::size_t i = 0; i < a.pairs.size(); ++i) CHECK(a.pairs[i].count == b.pairs[i].count);
}

TEST_CASE("core row sets") {
    const CodeSpec rm25 = reed_muller(2, 5);
    CHECK(core_row_set(rm25, 22) == std::vector<std::uint32_t>{23, 26, 28, 30});
    CHECK(core_row_set(rm25, 25) == std::vector<std::uint32_t>{26, 27, 28, 29});

    const CodeSpec polar = polar128();
    CHECK(core_row_set(polar, 104).size() == 5);
    CHECK(core_row_set(polar, 84).size() == 7);

    // |K| = deg + lambda for every maximum-degree row
    for (const CodeSpec& spec : {rm25, polar}) {
        for (Monomial f : spec.max_stratum()) {
            const auto k_set = core_row_set(spec, row_index_of(f, spec.m));
            CHECK(static_cast<int>(k_set.size()) == f.degree() + lambda_total(f, f));
        }
    }

    CHECK_THROWS_AS(core_row_set(polar, 120), Error);  // degree 3 row
    CHECK_THROWS_AS(core_row_set(polar, 1), Error);    // not in the code
}

TEST_CASE("coset-view counts agree with the orbit-view counts") {
    const CodeSpec polar = polar128();
    CHECK(as_u64(count_pair_coset(polar, 104, 84)) == 512);
    CHECK(as_u64(count_pair_coset(reed_muller(2, 5), 22, 25)) == 64);

    for (const CodeSpec& spec : {polar, reed_muller(2, 5), reed_muller(3, 7)}) {
        const WeightReport report = count_1p5(spec);
        for (const PairRecord& rec : report.pairs)
            CHECK(count_pair_coset(spec, rec.f_row, rec.g_row) == rec.count);
    }

    CHECK_THROWS_AS(count_pair_coset(polar, 112, 104), Error);  // gcd degree 3
}

TEST_CASE("the plain core-row product needs the shared-slack discount") {
    // Without the lambda_{f lcm g}(h) term the coset product over-counts
    // whenever some index below an h-variable lies outside both monomials.
    // All worked examples above have zero slack; RM(3,7) has plenty of
    // nonzero-slack pairs, e.g. rows 116 and 71 (h = x3, index 2 is free).
    const CodeSpec rm37 = reed_muller(3, 7);
    const WeightReport report = count_1p5(rm37);
    std::size_t with_slack = 0;
    for (const PairRecord& rec : report.pairs) {
        const Monomial f = monomial_of_row(rec.f_row, 7);
        const Monomial g = monomial_of_row(rec.g_row, 7);
        const int slack = lambda_total(mono_lcm(f, g), mono_gcd(f, g));
        const count_t corrected = count_pair_coset(rm37, rec.f_row, rec.g_row);
        CHECK(corrected == rec.count);

        const auto kf = core_row_set(rm37, rec.f_row);
        const auto kg = core_row_set(rm37, rec.g_row);
        std::vector<std::uint32_t> both;
        std::set_intersection(kf.begin(), kf.end(), kg.begin(), kg.end(),
                              std::back_inserter(both));
        CHECK(static_cast<int>(both.size()) == rec.alpha);
        const count_t plain = pow2_checked(static_cast<unsigned>(
            static_cast<int>(kf.size() + kg.size()) - 1 - static_cast<int>(both.size())));
        CHECK(plain == corrected * pow2_checked(static_cast<unsigned>(slack)));
        if (slack > 0) ++with_slack;
    }
    CHECK(with_slack == 210);
    const int slack_116_71 =
        lambda_total(mono_lcm(monomial_of_row(116, 7), monomial_of_row(71, 7)),
                     mono_gcd(monomial_of_row(116, 7), monomial_of_row(71, 7)));
    CHECK(slack_116_71 == 1);
}

TEST_CASE("q function") {
    CHECK(q_function(0.0) == 0.5);
    for (double x : {0.25, 0.5, 1.0, 2.0, 3.5, 5.643, 6.912, 8.0}) {
        const long double ref = q_reference(x);
        CHECK(std::abs(q_function(x) - static_cast<double>(ref)) <=
              1e-12 * static_cast<double>(ref));
    }
}

TEST_CASE("union bound") {
    WeightReport zero;
    zero.w_min = 8;
    const std::vector<double> db{0, 4, 8};
    for (double b : union_bound(zero, 0.5, db)) CHECK(b == 0.0);

    WeightReport single;
    single.w_min = 8;
    single.a_min = 1;
    const std::vector<double> floor_db{-1e9};
    CHECK(union_bound(single, 0.5, floor_db).front() == 0.5);

    const WeightReport polar = count_1p5(polar128());
    const auto bounds = union_bound(polar, 0.5, std::vector<double>{2.0, 8.0});
    CHECK(bounds[1] <= bounds[0]);

    // full-report value against the independent quadrature at 6 dB
    const double ebn0 = std::pow(10.0, 0.6);
    const long double expected =
        688.0L * q_reference(std::sqrt(2.0 * 8.0 * 0.5 * ebn0)) +
        5376.0L * q_reference(std::sqrt(2.0 * 12.0 * 0.5 * ebn0));
    const double got = union_bound(polar, 0.5, std::vector<double>{6.0}).front();
    CHECK(std::abs(got - static_cast<double>(expected)) <=
          1e-12 * static_cast<double>(expected));

    CHECK_THROWS_AS(union_bound(polar, 0.0, db), Error);
    CHECK_THROWS_AS(union_bound(polar, 1.5, db), Error);
}
