#include "dmwe/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dmwe/lta.hpp"

namespace dmwe {

std::vector<std::uint32_t> parse_row_file_text(std::string_view text) {
    std::vector<std::uint32_t> rows;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',') {
            ++i;
        } else {
            std::size_t j = i;
            while (j < text.size() && text[j] > ' ' && text[j] != ',' && text[j] != '#') ++j;
            std::uint32_t value = 0;
            const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
            if (ec != std::errc{} || ptr != text.data() + j)
                throw Error(Err::argument,
                            "bad row index token '" + std::string(text.substr(i, j - i)) + "'");
            rows.push_back(value);
            i = j;
        }
    }
    return rows;
}

std::vector<std::uint32_t> read_row_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Err::io, "cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_row_file_text(buffer.str());
}

namespace {

nlohmann::json indices_json(Monomial f) {
    nlohmann::json arr = nlohmann::json::array();
    for (unsigned i : f.indices()) arr.push_back(i);
    return arr;
}

Monomial monomial_from_indices(const nlohmann::json& arr) {
    Monomial f;
    for (const auto& v : arr) f.vars |= 1u << v.get<unsigned>();
    return f;
}

}  // namespace

std::string report_to_json(const WeightReport& report) {
    nlohmann::json j;
    j["m"] = report.m;
    j["r"] = report.r;
    j["n"] = report.n;
    j["k"] = report.k;
    j["wmin"] = dec_string(report.w_min);
    j["A_wmin"] = dec_string(report.a_min);
    j["A_1p5wmin"] = dec_string(report.a_1p5);
    nlohmann::json pairs = nlohmann::json::array();
    for (const PairRecord& rec : report.pairs) {
        nlohmann::json p;
        p["f_row"] = rec.f_row;
        p["g_row"] = rec.g_row;
        p["h"] = indices_json(rec.h);
        p["f_over_h"] = indices_json(rec.f_over_h);
        p["g_over_h"] = indices_json(rec.g_over_h);
        p["lambda_h"] = rec.lambda_h;
        p["lambda_f_part"] = rec.lambda_f_part;
        p["lambda_g_part"] = rec.lambda_g_part;
        p["alpha"] = rec.alpha;
        p["count"] = dec_string(rec.count);
        pairs.push_back(std::move(p));
    }
    j["pairs"] = std::move(pairs);
    return j.dump(2) + "\n";
}

WeightReport report_from_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Err::argument, std::string("bad report JSON: ") + e.what());
    }
    try {
        WeightReport report;
        report.m = j.at("m").get<unsigned>();
        report.r = j.at("r").get<unsigned>();
        report.n = j.at("n").get<std::uint64_t>();
        report.k = j.at("k").get<std::uint64_t>();
        report.w_min = static_cast<std::uint64_t>(parse_count(j.at("wmin").get<std::string>()));
        report.a_min = parse_count(j.at("A_wmin").get<std::string>());
        report.a_1p5 = parse_count(j.at("A_1p5wmin").get<std::string>());
        for (const auto& p : j.at("pairs")) {
            PairRecord rec;
            rec.f_row = p.at("f_row").get<std::uint32_t>();
            rec.g_row = p.at("g_row").get<std::uint32_t>();
            rec.h = monomial_from_indices(p.at("h"));
            rec.f_over_h = monomial_from_indices(p.at("f_over_h"));
            rec.g_over_h = monomial_from_indices(p.at("g_over_h"));
            rec.lambda_h = p.at("lambda_h").get<int>();
            rec.lambda_f_part = p.at("lambda_f_part").get<int>();
            rec.lambda_g_part = p.at("lambda_g_part").get<int>();
            rec.alpha = p.at("alpha").get<int>();
            rec.count = parse_count(p.at("count").get<std::string>());
            report.pairs.push_back(std::move(rec));
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Err::argument, std::string("bad report JSON: ") + e.what());
    }
}

namespace {

std::string indices_csv(Monomial f) {
    std::string s;
    for (unsigned i : f.indices()) {
        if (!s.empty()) s += ",";
        s += std::to_string(i);
    }
    return s.empty() ? "-" : s;
}

// "2^(d+l0+l1+...)" with one lambda term per variable, ascending.
std::string orbit_size_breakdown(Monomial owner, Monomial part) {
    std::string s = "2^(" + std::to_string(part.degree());
    for (unsigned i : part.indices()) s += "+" + std::to_string(lambda_single(owner, i));
    return s + ")";
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

}  // namespace

std::string report_to_table(const WeightReport& report) {
    std::vector<std::array<std::string, 9>> rows;
    rows.push_back({"f_row,g_row", "ind(f),ind(g)", "ind(h)", "ind(f/h)", "ind(g/h)",
                    "|orb h|", "|orb f/h|", "|orb g/h|", "penalty  count"});
    for (const PairRecord& rec : report.pairs) {
        const Monomial f = monomial_of_row(rec.f_row, report.m);
        const Monomial g = monomial_of_row(rec.g_row, report.m);
        rows.push_back({std::to_string(rec.f_row) + "," + std::to_string(rec.g_row),
                        "[" + indices_csv(f) + "],[" + indices_csv(g) + "]",
                        "[" + indices_csv(rec.h) + "]", "[" + indices_csv(rec.f_over_h) + "]",
                        "[" + indices_csv(rec.g_over_h) + "]", orbit_size_breakdown(rec.h, rec.h),
                        orbit_size_breakdown(f, rec.f_over_h), orbit_size_breakdown(g, rec.g_over_h),
                        "2^-" + std::to_string(rec.alpha) + "     " + dec_string(rec.count)});
    }
    std::array<std::size_t, 9> widths{};
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += pad(row[c], widths[c]);
            if (c + 1 < row.size()) out += "  ";
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += "\n";
    }
    out += "A_1.5wmin total: " + dec_string(report.a_1p5) + "\n";
    return out;
}

std::string spectrum_to_json(const Spectrum& spectrum) {
    nlohmann::json j;
    j["n"] = spectrum.n;
    j["k"] = spectrum.k;
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [weight, count] : spectrum.counts)
        counts[std::to_string(weight)] = std::to_string(count);
    j["counts"] = std::move(counts);
    return j.dump(2) + "\n";
}

std::string spectrum_to_csv(const Spectrum& spectrum) {
    std::string out = "weight,count\n";
    for (const auto& [weight, count] : spectrum.counts)
        out += std::to_string(weight) + "," + std::to_string(count) + "\n";
    return out;
}

std::string union_bound_csv(const WeightReport& report, double rate,
                            std::span<const double> ebn0_db) {
    const std::vector<double> bounds = union_bound(report, rate, ebn0_db);
    std::string out =
        "# truncated union bound over weights wmin and 1.5*wmin (all terms with w < 2*wmin)\n";
    out += "# rate=" + std::to_string(rate) + " wmin=" + std::to_string(report.w_min) + "\n";
    out += "ebn0_db,bler_bound\n";
    char buf[64];
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6g,%.17g\n", ebn0_db[i], bounds[i]);
        out += buf;
    }
    return out;
}

}  // namespace dmwe
