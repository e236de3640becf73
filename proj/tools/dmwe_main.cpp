// Command line front end. Talks to the shared library exclusively through
// its C interface.
//
// Exit codes: 0 ok, 1 usage or I/O or size limits, 2 invalid code,
// 3 verification mismatch.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dmwe.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidCode = 2;
constexpr int kExitMismatch = 3;

int exit_code_of(dmwe_status status) {
    switch (status) {
        case DMWE_OK:
            return kExitOk;
        case DMWE_ERR_NOT_DECREASING:
        case DMWE_ERR_INDEX_RANGE:
        case DMWE_ERR_UNSUPPORTED:
        case DMWE_ERR_BAD_PAIR:
        case DMWE_ERR_ROW_NOT_MAX_DEGREE:
            return kExitInvalidCode;
        case DMWE_ERR_MISMATCH:
            return kExitMismatch;
        default:
            return kExitUsage;
    }
}

int fail(dmwe_status status) {
    std::cerr << "error: " << dmwe_last_error() << "\n";
    return exit_code_of(status);
}

struct StringHolder {
    char* s = nullptr;
    ~StringHolder() { dmwe_string_free(s); }
};

using CodePtr = std::unique_ptr<dmwe_code, decltype(&dmwe_code_free)>;
using ReportPtr = std::unique_ptr<dmwe_report, decltype(&dmwe_report_free)>;

struct CodeSource {
    std::string rows_file;
    std::vector<uint32_t> rm;  // {r, m}
    uint32_t m = 0;
    bool closure = false;
    bool strict = false;

    void attach(CLI::App* cmd) {
        auto* rows_opt = cmd->add_option("--rows", rows_file,
                                         "file of generator row indices (decimal, '#' comments)");
        cmd->add_option("--m", m, "number of variables (with --rows)")->needs(rows_opt);
        cmd->add_option("--rm", rm, "Reed-Muller parameters: r m")->expected(2)->excludes(rows_opt);
        auto* closure_flag =
            cmd->add_flag("--closure", closure,
                          "complete a non-decreasing row set downward instead of rejecting it");
        cmd->add_flag("--strict", strict, "reject non-decreasing row sets (the default)")
            ->excludes(closure_flag);
    }

    // Returns DMWE_OK and fills `code`, or reports the failure.
    dmwe_status build(CodePtr& code, bool quiet = false) const {
        dmwe_code* raw = nullptr;
        dmwe_status status;
        if (!rm.empty()) {
            status = dmwe_code_reed_muller(rm[0], rm[1], &raw);
        } else if (!rows_file.empty()) {
            if (m == 0) {
                std::cerr << "error: --rows needs --m\n";
                return DMWE_ERR_ARGUMENT;
            }
            std::ifstream in(rows_file);
            if (!in) {
                std::cerr << "error: cannot open " << rows_file << "\n";
                return DMWE_ERR_IO;
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            status = dmwe_code_from_rows_text(buffer.str().c_str(), m, closure ? 1 : 0, &raw);
        } else {
            std::cerr << "error: give a code via --rows FILE --m M or --rm R M\n";
            return DMWE_ERR_ARGUMENT;
        }
        if (status != DMWE_OK) return status;
        code = CodePtr(raw, &dmwe_code_free);
        if (!quiet && closure) {
            const size_t added = dmwe_code_closure_added_rows(raw, nullptr, 0);
            if (added > 0) {
                std::vector<uint32_t> buf(added);
                dmwe_code_closure_added_rows(raw, buf.data(), buf.size());
                std::cout << "closure added " << added << " rows:";
                for (uint32_t row : buf) std::cout << " " << row;
                std::cout << "\n";
            }
        }
        return DMWE_OK;
    }
};

std::vector<double> parse_ebn0_range(const std::string& text) {
    // "lo:hi:step" or a comma list of points
    std::vector<double> points;
    if (text.find(':') != std::string::npos) {
        double lo = 0, hi = 0, step = 1;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0)
            throw CLI::ValidationError("--ebn0", "expected lo:hi:step with step > 0");
        for (double x = lo; x <= hi + 1e-9; x += step) points.push_back(x);
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) points.push_back(std::stod(item));
    }
    if (points.empty()) throw CLI::ValidationError("--ebn0", "no points");
    return points;
}

int run_enumerate(const CodeSource& source, bool json, bool with_pairs) {
    CodePtr code(nullptr, &dmwe_code_free);
    if (auto status = source.build(code, json); status != DMWE_OK) return fail(status);
    dmwe_report* raw = nullptr;
    if (auto status = dmwe_code_weight_report(code.get(), &raw); status != DMWE_OK)
        return fail(status);
    ReportPtr report(raw, &dmwe_report_free);

    if (json) {
        StringHolder text;
        if (auto status = dmwe_report_json(report.get(), &text.s); status != DMWE_OK)
            return fail(status);
        std::cout << text.s;
        return kExitOk;
    }
    StringHolder a_min, a_1p5;
    dmwe_report_count(report.get(), 0, &a_min.s);
    dmwe_report_count(report.get(), 1, &a_1p5.s);
    std::cout << "code: m=" << dmwe_code_m(code.get()) << " N=" << dmwe_code_length(code.get())
              << " K=" << dmwe_code_dimension(code.get())
              << " r=" << dmwe_code_max_degree(code.get()) << "\n";
    std::cout << "wmin: " << dmwe_report_wmin(report.get()) << "\n";
    std::cout << "A_wmin: " << a_min.s << "\n";
    std::cout << "A_1.5wmin: " << a_1p5.s << " (" << dmwe_report_pair_count(report.get())
              << " qualifying pairs)\n";
    if (with_pairs) {
        StringHolder table;
        if (auto status = dmwe_report_table(report.get(), &table.s); status != DMWE_OK)
            return fail(status);
        std::cout << table.s;
    }
    return kExitOk;
}

int run_pairs(const CodeSource& source) {
    CodePtr code(nullptr, &dmwe_code_free);
    if (auto status = source.build(code); status != DMWE_OK) return fail(status);
    dmwe_report* raw = nullptr;
    if (auto status = dmwe_code_weight_report(code.get(), &raw); status != DMWE_OK)
        return fail(status);
    ReportPtr report(raw, &dmwe_report_free);
    StringHolder table;
    if (auto status = dmwe_report_table(report.get(), &table.s); status != DMWE_OK)
        return fail(status);
    std::cout << table.s;
    return kExitOk;
}

int run_verify(const CodeSource& source, uint32_t k_limit, uint32_t threads) {
    CodePtr code(nullptr, &dmwe_code_free);
    if (auto status = source.build(code); status != DMWE_OK) return fail(status);
    StringHolder text;
    const dmwe_status status = dmwe_code_verify(code.get(), k_limit, threads, &text.s);
    if (text.s != nullptr) std::cout << text.s;
    if (status == DMWE_OK) return kExitOk;
    if (status == DMWE_ERR_MISMATCH) return kExitMismatch;
    return fail(status);
}

int run_orbit(const std::string& vars, int64_t row, uint32_t m) {
    if (m == 0) {
        std::cerr << "error: orbit needs --m\n";
        return kExitUsage;
    }
    uint32_t mask = 0;
    if (row >= 0) {
        if (row >= (int64_t{1} << m)) {
            std::cerr << "error: row out of range\n";
            return kExitInvalidCode;
        }
        mask = (~static_cast<uint32_t>(row)) & ((1u << m) - 1u);
    } else {
        try {
            std::stringstream ss(vars);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty()) continue;
                const unsigned long v = std::stoul(item);
                if (v >= m) {
                    std::cerr << "error: variable index " << v << " out of range for m=" << m << "\n";
                    return kExitInvalidCode;
                }
                mask |= 1u << v;
            }
        } catch (const std::exception&) {
            std::cerr << "error: bad --vars list '" << vars << "'\n";
            return kExitUsage;
        }
    }
    StringHolder text;
    if (auto status = dmwe_orbit_text(mask, m, &text.s); status != DMWE_OK) return fail(status);
    std::cout << text.s;
    return kExitOk;
}

int run_bler(const CodeSource& source, const std::string& report_file, double rate,
             const std::string& ebn0) {
    std::vector<double> points;
    try {
        points = parse_ebn0_range(ebn0);
    } catch (const std::exception& e) {
        std::cerr << "error: bad --ebn0 '" << ebn0 << "': " << e.what() << "\n";
        return kExitUsage;
    }
    ReportPtr report(nullptr, &dmwe_report_free);
    if (!report_file.empty()) {
        std::ifstream in(report_file);
        if (!in) {
            std::cerr << "error: cannot open " << report_file << "\n";
            return kExitUsage;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        dmwe_report* raw = nullptr;
        if (auto status = dmwe_report_from_json(buffer.str().c_str(), &raw); status != DMWE_OK)
            return fail(status);
        report = ReportPtr(raw, &dmwe_report_free);
    } else {
        CodePtr code(nullptr, &dmwe_code_free);
        if (auto status = source.build(code, true); status != DMWE_OK) return fail(status);
        dmwe_report* raw = nullptr;
        if (auto status = dmwe_code_weight_report(code.get(), &raw); status != DMWE_OK)
            return fail(status);
        report = ReportPtr(raw, &dmwe_report_free);
    }
    StringHolder csv;
    if (auto status = dmwe_report_union_bound_csv(report.get(), rate, points.data(), points.size(),
                                                  &csv.s);
        status != DMWE_OK)
        return fail(status);
    std::cout << csv.s;
    return kExitOk;
}

int run_oracle(const CodeSource& source, uint32_t k_limit, uint32_t threads, bool csv) {
    CodePtr code(nullptr, &dmwe_code_free);
    if (auto status = source.build(code, true); status != DMWE_OK) return fail(status);
    StringHolder text;
    if (auto status = dmwe_code_spectrum(code.get(), k_limit, threads, csv ? 1 : 0, &text.s);
        status != DMWE_OK)
        return fail(status);
    std::cout << text.s;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weight enumeration for decreasing monomial codes (polar, Reed-Muller)"};
    app.require_subcommand(1);
    app.fallthrough(true);  // global flags may follow the subcommand
    app.failure_message(CLI::FailureMessage::simple);

    uint32_t k_limit = 0;
    uint32_t threads = 0;
    app.add_option("--k-limit", k_limit, "dimension cap for exhaustive sweeps (default 24)");
    app.add_option("--threads", threads, "worker threads for the oracle, 0 = auto");

    bool json = false, csv = false;
    app.add_flag("--json", json, "emit JSON where supported");
    app.add_flag("--csv", csv, "emit CSV where supported");

    CodeSource enum_source, pairs_source, verify_source, bler_source, oracle_source;
    bool with_pairs = false;

    auto* cmd_enumerate =
        app.add_subcommand("enumerate", "closed-form A_wmin and A_1.5wmin for a code");
    enum_source.attach(cmd_enumerate);
    cmd_enumerate->add_flag("--pairs", with_pairs, "also print the per-pair table");

    auto* cmd_pairs = app.add_subcommand("pairs", "per-pair table for the 1.5*wmin count");
    pairs_source.attach(cmd_pairs);

    auto* cmd_verify =
        app.add_subcommand("verify", "check the closed forms against the brute-force oracle");
    verify_source.attach(cmd_verify);

    std::string orbit_vars;
    int64_t orbit_row = -1;
    uint32_t orbit_m = 0;
    auto* cmd_orbit = app.add_subcommand("orbit", "list the orbit of a monomial");
    cmd_orbit->add_option("--vars", orbit_vars, "variable indices, e.g. 0,1 (empty = constant 1)");
    cmd_orbit->add_option("--row", orbit_row, "monomial given as a generator row index");
    cmd_orbit->add_option("--m", orbit_m, "number of variables")->required();

    std::string bler_report, bler_ebn0 = "0:10:1";
    double bler_rate = 0;
    auto* cmd_bler = app.add_subcommand("bler", "truncated union bound curve as CSV");
    bler_source.attach(cmd_bler);
    cmd_bler->add_option("--report", bler_report, "read a previously emitted report JSON");
    cmd_bler->add_option("--rate", bler_rate, "override the code rate K/N");
    cmd_bler->add_option("--ebn0", bler_ebn0, "Eb/N0 points in dB: lo:hi:step or a comma list");

    auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive weight spectrum (small K)");
    oracle_source.attach(cmd_oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (cmd_enumerate->parsed()) return run_enumerate(enum_source, json, with_pairs);
    if (cmd_pairs->parsed()) return run_pairs(pairs_source);
    if (cmd_verify->parsed()) return run_verify(verify_source, k_limit, threads);
    if (cmd_orbit->parsed()) return run_orbit(orbit_vars, orbit_row, orbit_m);
    if (cmd_bler->parsed()) return run_bler(bler_source, bler_report, bler_rate, bler_ebn0);
    if (cmd_oracle->parsed()) return run_oracle(oracle_source, k_limit, threads, csv);
    return kExitUsage;
}
