#include "dmwe/verify.hpp"

#include <cstdlib>

#include "dmwe/enumerator.hpp"

namespace dmwe {

namespace {

void add_check(VerifyReport& report, const std::string& name, bool pass, std::string detail) {
    report.checks.push_back(CheckResult{name, pass, std::move(detail)});
    report.all_pass = report.all_pass && pass;
}

}  // namespace

VerifyReport verify_code(const CodeSpec& spec, const OracleLimits& limits, unsigned threads) {
    VerifyReport report;

    const Spectrum spectrum = brute_force_spectrum(spec, limits, threads);
    count_t a_min = count_min_weight(spec);
    if (std::getenv("DMWE_VERIFY_INJECT_FAULT") != nullptr) a_min = checked_add(a_min, 1);

    add_check(report, "spectrum total = 2^K",
              [&] {
                  std::uint64_t sum = 0;
                  for (const auto& [w, c] : spectrum.counts) sum += c;
                  return sum == (std::uint64_t{1} << spec.k);
              }(),
              "");
    add_check(report, "spectrum[wmin] = closed-form A_wmin",
              count_t{spectrum.at(spec.w_min)} == a_min,
              "oracle " + std::to_string(spectrum.at(spec.w_min)) + ", formula " + dec_string(a_min));
    add_check(report, "no codeword weight below wmin",
              spectrum.counts.size() < 2 || std::next(spectrum.counts.begin())->first >= spec.w_min,
              "");

    const EvalSet min_set = min_weight_set(spec, limits);
    add_check(report, "|orbit union| = closed-form A_wmin", count_t{min_set.size()} == a_min,
              "orbit union " + std::to_string(min_set.size()) + ", formula " + dec_string(a_min));
    add_check(report, "orbit union = exhaustive weight-wmin class",
              min_set == brute_force_weight_class(spec, spec.w_min, limits), "");

    if (spec.r < spec.m) {
        const WeightReport wr = count_1p5(spec);
        const std::uint64_t w15 = 3 * (spec.w_min >> 1);
        add_check(report, "spectrum[1.5*wmin] = closed-form A_1.5wmin",
                  count_t{spectrum.at(w15)} == wr.a_1p5,
                  "oracle " + std::to_string(spectrum.at(w15)) + ", formula " + dec_string(wr.a_1p5));

        const Census census = one_five_census(spec, limits);
        add_check(report, "census count = closed-form A_1.5wmin", count_t{census.count} == wr.a_1p5,
                  "census " + std::to_string(census.count) + ", formula " + dec_string(wr.a_1p5));
        add_check(report, "census set = exhaustive weight-1.5*wmin class",
                  census.codewords == brute_force_weight_class(spec, w15, limits), "");

        bool coset_match = true;
        std::string coset_detail;
        for (const PairRecord& rec : wr.pairs) {
            const count_t via_cosets = count_pair_coset(spec, rec.f_row, rec.g_row);
            if (via_cosets != rec.count) {
                coset_match = false;
                coset_detail = "pair (" + std::to_string(rec.f_row) + ", " + std::to_string(rec.g_row) +
                               "): orbit form " + dec_string(rec.count) + ", coset form " +
                               dec_string(via_cosets);
                break;
            }
        }
        add_check(report, "per-pair orbit count = core-row count", coset_match, coset_detail);
    }

    return report;
}

}  // namespace dmwe
