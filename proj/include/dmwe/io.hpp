// Text interfaces: row-index files, report JSON (canonical key order, counts
// as decimal strings), the aligned per-pair table, spectrum JSON/CSV, and
// union-bound CSV.
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmwe/enumerator.hpp"
#include "dmwe/oracle.hpp"

namespace dmwe {

// Whitespace or newline separated decimal row indices; '#' starts a comment
// that runs to the end of the line.
std::vector<std::uint32_t> parse_row_file_text(std::string_view text);
std::vector<std::uint32_t> read_row_file(const std::string& path);

// Round-trips byte-identically: parse(report_to_json(r)) re-serializes to
// the same bytes.
std::string report_to_json(const WeightReport& report);
WeightReport report_from_json(std::string_view json_text);

// Aligned per-pair table: rows, supports, h, parts, orbit sizes with
// per-variable exponent breakdowns, penalty, count.
std::string report_to_table(const WeightReport& report);

std::string spectrum_to_json(const Spectrum& spectrum);
std::string spectrum_to_csv(const Spectrum& spectrum);

std::string union_bound_csv(const WeightReport& report, double rate,
                            std::span<const double> ebn0_db);

}  // namespace dmwe
