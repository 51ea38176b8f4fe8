#include "qcodim/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "qcodim/error.hpp"

namespace qcodim::io {

namespace {

json extreal_to_json(ExtReal x) {
    if (x.is_plus_inf()) return "inf";
    if (x.is_minus_inf()) return "-inf";
    return x.value();
}

ExtReal extreal_from_json(const json& j, const char* field) {
    if (j.is_number()) return ExtReal(j.get<double>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf" || s == "+inf") return ExtReal::plus_inf();
        if (s == "-inf") return ExtReal::minus_inf();
    }
    throw ParseError(std::string("bar ") + field + " must be a number, \"inf\" or \"-inf\"");
}

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<double> numbers_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of numbers");
    std::vector<double> out;
    for (const auto& x : j) {
        if (!x.is_number()) throw ParseError(std::string(what) + " must contain only numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

std::int64_t integer_from_json(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

json pair_to_json(double a, double b) { return json::array({a, b}); }

json bar_to_json(const Bar& bar) {
    return json::array({extreal_to_json(bar.birth), extreal_to_json(bar.death)});
}

}  // namespace

std::string format_number(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, res.ptr};
}

json barcode_to_json(const Barcode& bc) {
    json index_set;
    if (bc.index_set().is_dense()) {
        index_set = {{"type", "real"}};
    } else {
        index_set = {{"type", "grid"}, {"points", bc.index_set().grid().points()}};
    }
    json bars = json::array();
    for (const auto& e : bc.entries()) {
        bars.push_back({{"birth", extreal_to_json(e.bar.birth)},
                        {"death", extreal_to_json(e.bar.death)},
                        {"mult", e.multiplicity}});
    }
    return {{"index_set", index_set}, {"bars", bars}};
}

FiniteGrid grid_from_json(const json& j) {
    if (j.is_array()) return FiniteGrid(numbers_from_json(j, "grid"));
    const auto& type = require(j, "type");
    if (type != "grid") throw ParseError("grid must be an array or an index set of type \"grid\"");
    return FiniteGrid(numbers_from_json(require(j, "points"), "grid points"));
}

Barcode barcode_from_json(const json& j) {
    const auto& is = require(j, "index_set");
    const auto& type = require(is, "type");
    IndexSet index_set = IndexSet::dense_real();
    if (type == "grid") {
        index_set = IndexSet::finite(grid_from_json(is));
    } else if (type != "real") {
        throw ParseError("index_set type must be \"real\" or \"grid\"");
    }
    const auto& bars = require(j, "bars");
    if (!bars.is_array()) throw ParseError("\"bars\" must be an array");
    std::vector<BarEntry> entries;
    for (const auto& b : bars) {
        const auto birth = extreal_from_json(require(b, "birth"), "birth");
        const auto death = extreal_from_json(require(b, "death"), "death");
        const std::int64_t mult = b.contains("mult") ? integer_from_json(b.at("mult"), "mult") : 1;
        entries.push_back({Bar(birth, death), mult});
    }
    return Barcode(std::move(index_set), std::move(entries));
}

json rep_to_json(const QuiverRep& rep) {
    json maps = json::array();
    for (const auto& m : rep.maps()) {
        json rows = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
            rows.push_back(std::move(row));
        }
        maps.push_back(std::move(rows));
    }
    return {{"p", rep.field().p()}, {"dims", rep.dims()}, {"maps", maps}};
}

QuiverRep rep_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("representation must be a JSON object");
    const std::int64_t p = j.contains("p") ? integer_from_json(j.at("p"), "p") : 2;
    if (p < 2 || p > 65521) throw InvariantError("field characteristic " + std::to_string(p) + " is not a supported prime");
    const PrimeField field(static_cast<std::uint32_t>(p));

    const auto& dims_json = require(j, "dims");
    if (!dims_json.is_array()) throw ParseError("\"dims\" must be an array");
    std::vector<std::size_t> dims;
    for (const auto& d : dims_json) {
        const auto v = integer_from_json(d, "dims entry");
        if (v < 0) throw InvariantError("dimensions must be non-negative");
        dims.push_back(static_cast<std::size_t>(v));
    }

    const auto& maps_json = require(j, "maps");
    if (!maps_json.is_array()) throw ParseError("\"maps\" must be an array");
    std::vector<GfMatrix> maps;
    for (std::size_t k = 0; k < maps_json.size(); ++k) {
        const auto& rows = maps_json[k];
        if (!rows.is_array()) throw ParseError("each map must be an array of rows");
        const std::size_t cols = rows.empty() ? (k < dims.size() ? dims[k] : 0) : rows.front().size();
        GfMatrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!rows[r].is_array()) throw ParseError("each matrix row must be an array");
            if (rows[r].size() != cols) {
                std::ostringstream msg;
                msg << "map " << k + 1 << " is ragged: row " << r << " has " << rows[r].size() << " entries, expected "
                    << cols;
                throw InvariantError(msg.str());
            }
            for (std::size_t c = 0; c < cols; ++c) {
                const auto v = integer_from_json(rows[r][c], "matrix entry");
                if (v < 0 || v >= p) {
                    std::ostringstream msg;
                    msg << "map " << k + 1 << " entry (" << r << "," << c << ") = " << v << " is not in 0.." << p - 1;
                    throw InvariantError(msg.str());
                }
                m(r, c) = static_cast<std::uint32_t>(v);
            }
        }
        maps.push_back(std::move(m));
    }
    return QuiverRep(field, std::move(dims), std::move(maps));
}

json report_to_json(const ApproxReport& report) {
    json crit_i = json::array();
    for (double z : report.cond_i_violations) crit_i.push_back(z);
    json crit_ii = json::array();
    for (const auto& [a, b] : report.cond_ii_violations) crit_ii.push_back(json::array({bar_to_json(a), bar_to_json(b)}));
    json crit_iii = json::array();
    for (const auto& [a, b] : report.cond_iii_violations) crit_iii.push_back(pair_to_json(a, b));

    auto opt = [](const std::optional<std::int64_t>& v) -> json { return v ? json(*v) : json(nullptr); };
    return {
        {"grid", report.grid.points()},
        {"h", report.h},
        {"cond_i", {{"holds", report.cond_i()}, {"violations", crit_i}}},
        {"cond_ii", {{"holds", report.cond_ii()}, {"violations", crit_ii}}},
        {"cond_iii", {{"holds", report.cond_iii()}, {"violations", crit_iii}}},
        {"qcodim_original", opt(report.qcodim_original)},
        {"qcodim_restricted", opt(report.qcodim_restricted)},
        {"stable", report.stable()},
    };
}

ApproxReport report_from_json(const json& j) {
    ApproxReport report;
    report.grid = FiniteGrid(numbers_from_json(require(j, "grid"), "grid"));
    report.h = static_cast<int>(integer_from_json(require(j, "h"), "h"));
    auto violations = [&](const char* key) -> const json& {
        const auto& v = require(require(j, key), "violations");
        if (!v.is_array()) throw ParseError(std::string(key) + " violations must be an array");
        return v;
    };
    report.cond_i_violations = numbers_from_json(violations("cond_i"), "cond_i violations");
    for (const auto& pair : violations("cond_ii")) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_array() || pair[0].size() != 2 ||
            !pair[1].is_array() || pair[1].size() != 2)
            throw ParseError("cond_ii violations must be pairs of [birth, death] bars");
        report.cond_ii_violations.emplace_back(
            Bar(extreal_from_json(pair[0][0], "birth"), extreal_from_json(pair[0][1], "death")),
            Bar(extreal_from_json(pair[1][0], "birth"), extreal_from_json(pair[1][1], "death")));
    }
    for (const auto& pair : violations("cond_iii")) {
        const auto v = numbers_from_json(pair, "cond_iii violation");
        if (v.size() != 2) throw ParseError("cond_iii violations must be [z_i, z_i+1] pairs");
        report.cond_iii_violations.emplace_back(v[0], v[1]);
    }
    auto opt = [&](const char* key) -> std::optional<std::int64_t> {
        const auto& v = require(j, key);
        if (v.is_null()) return std::nullopt;
        return integer_from_json(v, key);
    };
    report.qcodim_original = opt("qcodim_original");
    report.qcodim_restricted = opt("qcodim_restricted");
    return report;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

namespace {

bool parse_row(std::string_view line, std::vector<double>& out) {
    out.clear();
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ',' || line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos == line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ',' && line[end] != ' ' && line[end] != '\t') ++end;
        std::string_view token = line.substr(pos, end - pos);
        if (!token.empty() && token.front() == '+') token.remove_prefix(1);
        double x = 0.0;
        const auto res = std::from_chars(token.data(), token.data() + token.size(), x);
        if (res.ec != std::errc() || res.ptr != token.data() + token.size()) return false;
        out.push_back(x);
        pos = end;
    }
    return true;
}

}  // namespace

std::vector<std::vector<double>> parse_csv_rows(std::string_view text) {
    std::vector<std::vector<double>> rows;
    std::vector<double> row;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        start = end + 1;
        ++line_no;
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
        if (!parse_row(line, row)) {
            if (rows.empty() && line_no == 1) continue;  // header
            throw ParseError("CSV line " + std::to_string(line_no) + ": not a list of numbers");
        }
        rows.push_back(row);
    }
    return rows;
}

std::string rows_to_csv(const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0) out += ',';
            out += format_number(row[k]);
        }
        out += '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed for " + path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace qcodim::io
