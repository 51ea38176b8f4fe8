#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcodim/approx.hpp"
#include "qcodim/barcode.hpp"
#include "qcodim/ph.hpp"
#include "qcodim/quiver.hpp"

namespace qcodim::io {

using nlohmann::json;

/// Shortest decimal that parses back to the same double.
std::string format_number(double x);

// Barcode JSON:
//   {"index_set": {"type": "real"} | {"type": "grid", "points": [...]},
//    "bars": [{"birth": number | "-inf", "death": number | "inf", "mult": int}, ...]}
json barcode_to_json(const Barcode& bc);
Barcode barcode_from_json(const json& j);

// {"p": int, "dims": [...], "maps": [rows x cols nested arrays]}
json rep_to_json(const QuiverRep& rep);
QuiverRep rep_from_json(const json& j);

/// A bare array of points, or an index_set object of type "grid".
FiniteGrid grid_from_json(const json& j);

json report_to_json(const ApproxReport& report);
/// Inverse of report_to_json; "stable" is recomputed from the qcodim fields.
ApproxReport report_from_json(const json& j);

/// Parses JSON text; syntax errors become ParseError.
json parse_json(std::string_view text);

/// One point per line, comma or whitespace separated. A first line that does
/// not parse as numbers is treated as a header.
std::vector<std::vector<double>> parse_csv_rows(std::string_view text);
std::string rows_to_csv(const std::vector<std::vector<double>>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// JSON text with a trailing newline, numbers in shortest round-trip form.
std::string dump(const json& j);

}  // namespace qcodim::io
