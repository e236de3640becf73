#include "dmwe/enumerator.hpp"

#include <algorithm>
#include <cmath>

#include "dmwe/lta.hpp"
#include "dmwe/minkowski.hpp"

namespace dmwe {

count_t count_min_weight(const CodeSpec& spec) {
    count_t total = 0;
    for (Monomial f : spec.max_stratum()) total = checked_add(total, orbit_cardinality(f));
    return total;
}

WeightReport count_1p5(const CodeSpec& spec) {
    if (spec.r == spec.m)
        throw Error(Err::unsupported,
                    "r = m: the code is the full space below degree m and 1.5*wmin is not "
                    "an integer weight");
    WeightReport report;
    report.m = spec.m;
    report.r = spec.r;
    report.n = spec.n;
    report.k = spec.k;
    report.w_min = spec.w_min;
    report.a_min = count_min_weight(spec);
    report.a_1p5 = 0;
    for (const MaxDegreePair& pair : max_degree_pairs(spec)) {
        PairRecord rec;
        rec.f_row = pair.f_row;
        rec.g_row = pair.g_row;
        rec.h = pair.h;
        rec.f_over_h = mono_divide(pair.f, pair.h);
        rec.g_over_h = mono_divide(pair.g, pair.h);
        rec.lambda_h = lambda_total(pair.h, pair.h);
        rec.lambda_f_part = lambda_total(pair.f, rec.f_over_h);
        rec.lambda_g_part = lambda_total(pair.g, rec.g_over_h);
        rec.alpha = collision_degree(rec.f_over_h, rec.g_over_h);
        const int exponent =
            static_cast<int>(spec.r) + 2 + rec.lambda_h + rec.lambda_f_part + rec.lambda_g_part - rec.alpha;
        rec.count = pow2_checked(static_cast<unsigned>(exponent));
        report.a_1p5 = checked_add(report.a_1p5, rec.count);
        report.pairs.push_back(rec);
    }
    return report;
}

std::vector<std::uint32_t> core_row_set(const CodeSpec& spec, std::uint32_t f_row) {
    if (f_row >= spec.n || !spec.contains_row(f_row))
        throw Error(Err::row_not_max_degree, "row " + std::to_string(f_row) + " is not in the code");
    const Monomial f = monomial_of_row(f_row, spec.m);
    if (static_cast<unsigned>(f.degree()) != spec.r)
        throw Error(Err::row_not_max_degree,
                    "row " + std::to_string(f_row) + " has degree " + std::to_string(f.degree()) +
                        ", not the maximum degree " + std::to_string(spec.r));
    std::vector<std::uint32_t> out;
    for (std::uint32_t row : spec.rows) {
        if (row <= f_row) continue;
        if (std::popcount(row & ~f_row) == 1) out.push_back(row);
    }
    return out;  // spec.rows is ascending, so out is too
}

count_t count_pair_coset(const CodeSpec& spec, std::uint32_t f_row, std::uint32_t g_row) {
    const auto kf = core_row_set(spec, f_row);
    const auto kg = core_row_set(spec, g_row);
    if (std::popcount(g_row & ~f_row) != 2)
        throw Error(Err::bad_pair, "rows " + std::to_string(f_row) + ", " + std::to_string(g_row) +
                                       " do not differ in exactly two support indices");
    std::vector<std::uint32_t> both;
    std::set_intersection(kf.begin(), kf.end(), kg.begin(), kg.end(), std::back_inserter(both));
    // Core-row pairings double count the freedom the shared factor h has on
    // variables below it that appear in neither monomial; 2^(r-2) matching
    // alone removes it only when no such variable exists. The exact discount
    // is lambda of h's variables measured against the union monomial.
    const Monomial f = monomial_of_row(f_row, spec.m);
    const Monomial g = monomial_of_row(g_row, spec.m);
    const Monomial h = mono_gcd(f, g);
    const int shared_slack = lambda_total(mono_lcm(f, g), h);
    const int exponent = static_cast<int>(kf.size() + kg.size()) -
                         (static_cast<int>(spec.r) - 2) - static_cast<int>(both.size()) -
                         shared_slack;
    if (exponent < 0)
        throw Error(Err::bad_pair, "rows " + std::to_string(f_row) + ", " + std::to_string(g_row) +
                                       " yield a negative exponent");
    return pow2_checked(static_cast<unsigned>(exponent));
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

std::vector<double> union_bound(const WeightReport& report, double rate,
                                std::span<const double> ebn0_db) {
    if (!(rate > 0.0) || rate > 1.0) throw Error(Err::argument, "rate must be in (0, 1]");
    const double a_min = count_to_double(report.a_min);
    const double a_1p5 = count_to_double(report.a_1p5);
    const double w1 = static_cast<double>(report.w_min);
    const double w2 = 1.5 * w1;
    std::vector<double> out;
    out.reserve(ebn0_db.size());
    for (double db : ebn0_db) {
        const double ebn0 = std::pow(10.0, db / 10.0);
        const double bound = a_min * q_function(std::sqrt(2.0 * w1 * rate * ebn0)) +
                             a_1p5 * q_function(std::sqrt(2.0 * w2 * rate * ebn0));
        out.push_back(bound);
    }
    return out;
}

}  // namespace dmwe
