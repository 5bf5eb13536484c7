#pragma once

// Column-oriented output tables with CSV and JSON emission.
// Numbers are written locale-independently with 17 significant digits.

#include <json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace memdrift::io {

enum class OutputFormat { Csv, Json };

inline std::string format_name(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

inline std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto result =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    return std::string(buf.data(), result.ptr);
}

/// Empty cell (value not defined for this row), number, or text.
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

inline void write_csv(std::ostream& out, const Table& table) {
    for (const auto& [key, value] : table.metadata) out << "# " << key << ": " << value << '\n';
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            if (const auto* d = std::get_if<double>(&row[c])) out << format_number(*d);
            else if (const auto* s = std::get_if<std::string>(&row[c])) out << *s;
        }
        out << '\n';
    }
}

inline nlohmann::ordered_json to_json(const Table& table) {
    nlohmann::ordered_json doc;
    doc["metadata"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.metadata) doc["metadata"][key] = value;
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        auto jrow = nlohmann::ordered_json::array();
        for (const auto& cell : row) {
            if (const auto* d = std::get_if<double>(&cell)) {
                if (std::isfinite(*d)) jrow.push_back(*d);
                else jrow.push_back(format_number(*d));
            } else if (const auto* s = std::get_if<std::string>(&cell)) {
                jrow.push_back(*s);
            } else {
                jrow.push_back(nullptr);
            }
        }
        rows.push_back(std::move(jrow));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

inline void write_table(std::ostream& out, const Table& table, OutputFormat format) {
    if (format == OutputFormat::Csv) write_csv(out, table);
    else out << to_json(table).dump(2) << '\n';
}

} // namespace memdrift::io
