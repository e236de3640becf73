// C binding of the core library. Exceptions stop here and become status
// codes plus a thread-local message.
#include "dmwe.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "dmwe/code.hpp"
#include "dmwe/enumerator.hpp"
#include "dmwe/io.hpp"
#include "dmwe/lta.hpp"
#include "dmwe/oracle.hpp"
#include "dmwe/verify.hpp"

struct dmwe_code {
    dmwe::CodeSpec spec;
};

struct dmwe_report {
    dmwe::WeightReport report;
};

namespace {

thread_local std::string g_last_error;

dmwe_status status_of(dmwe::Err code) {
    using dmwe::Err;
    switch (code) {
        case Err::argument: return DMWE_ERR_ARGUMENT;
        case Err::index_range: return DMWE_ERR_INDEX_RANGE;
        case Err::not_decreasing: return DMWE_ERR_NOT_DECREASING;
        case Err::non_divisor: return DMWE_ERR_NON_DIVISOR;
        case Err::bad_pair: return DMWE_ERR_BAD_PAIR;
        case Err::row_not_max_degree: return DMWE_ERR_ROW_NOT_MAX_DEGREE;
        case Err::not_coprime: return DMWE_ERR_NOT_COPRIME;
        case Err::not_degree_two: return DMWE_ERR_NOT_DEGREE_TWO;
        case Err::too_large: return DMWE_ERR_TOO_LARGE;
        case Err::overflow: return DMWE_ERR_OVERFLOW;
        case Err::unsupported: return DMWE_ERR_UNSUPPORTED;
        case Err::mismatch: return DMWE_ERR_MISMATCH;
        case Err::io: return DMWE_ERR_IO;
    }
    return DMWE_ERR_ARGUMENT;
}

template <typename Fn>
dmwe_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const dmwe::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DMWE_ERR_ARGUMENT;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

dmwe_status require(bool ok, const char* message) {
    if (!ok) {
        g_last_error = message;
        return DMWE_ERR_ARGUMENT;
    }
    return DMWE_OK;
}

size_t copy_rows(const std::vector<std::uint32_t>& rows, uint32_t* buf, size_t cap) {
    if (buf != nullptr) {
        const size_t n = std::min(cap, rows.size());
        for (size_t i = 0; i < n; ++i) buf[i] = rows[i];
    }
    return rows.size();
}

}  // namespace

extern "C" {

const char* dmwe_version(void) { return "1.0.0"; }

const char* dmwe_last_error(void) { return g_last_error.c_str(); }

void dmwe_string_free(char* s) { delete[] s; }

dmwe_status dmwe_code_from_rows(const uint32_t* rows, size_t row_count, uint32_t m,
                                int apply_closure, dmwe_code** out) {
    if (auto st = require(out && (rows || row_count == 0), "null argument")) return st;
    return guarded([&] {
        auto spec = dmwe::code_from_row_indices(std::span(rows, row_count), m, apply_closure == 0);
        *out = new dmwe_code{std::move(spec)};
        return DMWE_OK;
    });
}

dmwe_status dmwe_code_from_rows_text(const char* text, uint32_t m, int apply_closure,
                                     dmwe_code** out) {
    if (auto st = require(out && text, "null argument")) return st;
    return guarded([&] {
        const auto rows = dmwe::parse_row_file_text(text);
        auto spec = dmwe::code_from_row_indices(rows, m, apply_closure == 0);
        *out = new dmwe_code{std::move(spec)};
        return DMWE_OK;
    });
}

dmwe_status dmwe_code_reed_muller(uint32_t r, uint32_t m, dmwe_code** out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] {
        *out = new dmwe_code{dmwe::reed_muller(r, m)};
        return DMWE_OK;
    });
}

void dmwe_code_free(dmwe_code* code) { delete code; }

uint32_t dmwe_code_m(const dmwe_code* code) { return code->spec.m; }
uint32_t dmwe_code_max_degree(const dmwe_code* code) { return code->spec.r; }
uint64_t dmwe_code_length(const dmwe_code* code) { return code->spec.n; }
uint64_t dmwe_code_dimension(const dmwe_code* code) { return code->spec.k; }
uint64_t dmwe_code_min_weight(const dmwe_code* code) { return code->spec.w_min; }

size_t dmwe_code_rows(const dmwe_code* code, uint32_t* buf, size_t cap) {
    return copy_rows(code->spec.rows, buf, cap);
}

size_t dmwe_code_closure_added_rows(const dmwe_code* code, uint32_t* buf, size_t cap) {
    return copy_rows(code->spec.closure_added_rows, buf, cap);
}

dmwe_status dmwe_code_weight_report(const dmwe_code* code, dmwe_report** out) {
    if (auto st = require(code && out, "null argument")) return st;
    return guarded([&] {
        *out = new dmwe_report{dmwe::count_1p5(code->spec)};
        return DMWE_OK;
    });
}

void dmwe_report_free(dmwe_report* report) { delete report; }

dmwe_status dmwe_report_count(const dmwe_report* report, int which, char** out) {
    if (auto st = require(report && out && (which == 0 || which == 1), "bad count selector"))
        return st;
    *out = dup_string(dmwe::dec_string(which == 0 ? report->report.a_min : report->report.a_1p5));
    return DMWE_OK;
}

uint64_t dmwe_report_wmin(const dmwe_report* report) { return report->report.w_min; }

size_t dmwe_report_pair_count(const dmwe_report* report) { return report->report.pairs.size(); }

dmwe_status dmwe_report_json(const dmwe_report* report, char** out) {
    if (auto st = require(report && out, "null argument")) return st;
    return guarded([&] {
        *out = dup_string(dmwe::report_to_json(report->report));
        return DMWE_OK;
    });
}

dmwe_status dmwe_report_from_json(const char* json_text, dmwe_report** out) {
    if (auto st = require(json_text && out, "null argument")) return st;
    return guarded([&] {
        *out = new dmwe_report{dmwe::report_from_json(json_text)};
        return DMWE_OK;
    });
}

dmwe_status dmwe_report_table(const dmwe_report* report, char** out) {
    if (auto st = require(report && out, "null argument")) return st;
    return guarded([&] {
        *out = dup_string(dmwe::report_to_table(report->report));
        return DMWE_OK;
    });
}

dmwe_status dmwe_report_union_bound(const dmwe_report* report, double rate,
                                    const double* ebn0_db, size_t point_count, double* out) {
    if (auto st = require(report && ebn0_db && out, "null argument")) return st;
    return guarded([&] {
        const double effective = rate > 0 ? rate : report->report.k / double(report->report.n);
        const auto bounds =
            dmwe::union_bound(report->report, effective, std::span(ebn0_db, point_count));
        for (size_t i = 0; i < bounds.size(); ++i) out[i] = bounds[i];
        return DMWE_OK;
    });
}

dmwe_status dmwe_report_union_bound_csv(const dmwe_report* report, double rate,
                                        const double* ebn0_db, size_t point_count, char** out) {
    if (auto st = require(report && ebn0_db && out, "null argument")) return st;
    return guarded([&] {
        const double effective = rate > 0 ? rate : report->report.k / double(report->report.n);
        *out = dup_string(
            dmwe::union_bound_csv(report->report, effective, std::span(ebn0_db, point_count)));
        return DMWE_OK;
    });
}

dmwe_status dmwe_orbit_text(uint32_t var_mask, uint32_t m, char** out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] {
        if (m < 1 || m > dmwe::kMaxVars || (var_mask >> m) != 0)
            throw dmwe::Error(dmwe::Err::argument, "variable mask does not fit in m variables");
        const dmwe::Monomial f{var_mask};
        const auto stats = dmwe::orbit_with_stats(f, f, m);
        std::vector<std::string> lines;
        lines.reserve(stats.set.size());
        for (const auto& p : stats.set) lines.push_back(p.str());
        std::sort(lines.begin(), lines.end());
        std::string text;
        for (const auto& line : lines) text += line + "\n";
        const int lam = dmwe::lambda_total(f, f);
        text += "orbit of " + f.str() + ": " + dmwe::dec_string(dmwe::orbit_cardinality(f)) +
                " = 2^(" + std::to_string(f.degree()) + "+" + std::to_string(lam) + ")\n";
        *out = dup_string(text);
        return DMWE_OK;
    });
}

dmwe_status dmwe_code_spectrum(const dmwe_code* code, uint32_t k_limit, uint32_t threads,
                               int format, char** out) {
    if (auto st = require(code && out, "null argument")) return st;
    return guarded([&] {
        dmwe::OracleLimits limits;
        if (k_limit != 0) limits.k_limit = k_limit;
        const auto spectrum = dmwe::brute_force_spectrum(code->spec, limits, threads);
        *out = dup_string(format == 1 ? dmwe::spectrum_to_csv(spectrum)
                                      : dmwe::spectrum_to_json(spectrum));
        return DMWE_OK;
    });
}

dmwe_status dmwe_code_verify(const dmwe_code* code, uint32_t k_limit, uint32_t threads,
                             char** out_report) {
    if (auto st = require(code && out_report, "null argument")) return st;
    return guarded([&] {
        dmwe::OracleLimits limits;
        if (k_limit != 0) limits.k_limit = k_limit;
        const auto verdict = dmwe::verify_code(code->spec, limits, threads);
        std::string text;
        for (const auto& check : verdict.checks) {
            text += std::string(check.pass ? "[pass] " : "[FAIL] ") + check.name;
            if (!check.detail.empty()) text += " (" + check.detail + ")";
            text += "\n";
        }
        text += verdict.all_pass ? "all checks passed\n" : "MISMATCH detected\n";
        *out_report = dup_string(text);
        if (!verdict.all_pass) {
            g_last_error = "verification mismatch";
            return DMWE_ERR_MISMATCH;
        }
        return DMWE_OK;
    });
}

}  // extern "C"
