#pragma once

// Table output in CSV and JSON. Reals are written with 17 significant digits
// through std::to_chars, so output is locale independent and byte-identical
// for identical inputs.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace sitnikov::io {

inline constexpr const char* kVersion = "1.0.0";

using Cell = std::variant<std::int64_t, double, std::string, bool>;

struct Table {
    std::string name;  // key of the table in JSON output; the primary table is "rows"
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

struct Document {
    std::vector<std::pair<std::string, Cell>> meta;
    Table rows{"rows", {}, {}};
    std::vector<Table> extra;  // appended after the primary table
};

enum class Format { Csv, Json };

inline std::string format_real(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace detail {

inline std::string csv_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) {
                return format_real(v);
            } else if constexpr (std::is_same_v<V, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<V, bool>) {
                return v ? "true" : "false";
            } else {
                if (v.find_first_of(",\"\n") == std::string::npos) return v;
                std::string quoted = "\"";
                for (char ch : v) {
                    if (ch == '"') quoted += '"';
                    quoted += ch;
                }
                return quoted + "\"";
            }
        },
        c);
}

inline std::string json_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) {
                return std::isfinite(v) ? format_real(v) : std::string("null");
            } else if constexpr (std::is_same_v<V, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<V, bool>) {
                return v ? "true" : "false";
            } else {
                return nlohmann::json(v).dump();
            }
        },
        c);
}

inline void write_csv_table(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        os << (i ? "," : "") << t.columns[i];
    }
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << csv_cell(row[i]);
        }
        os << '\n';
    }
}

inline void write_json_table(std::ostream& os, const Table& t) {
    os << '[';
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << (r ? ",\n  {" : "\n  {");
        for (std::size_t i = 0; i < t.columns.size() && i < t.rows[r].size(); ++i) {
            os << (i ? "," : "") << nlohmann::json(t.columns[i]).dump() << ':' << json_cell(t.rows[r][i]);
        }
        os << '}';
    }
    os << (t.rows.empty() ? "]" : "\n]");
}

} // namespace detail

// CSV: the primary table (header line first), then each extra table after a
// blank line with its own header.
inline void write_csv(std::ostream& os, const Document& doc) {
    detail::write_csv_table(os, doc.rows);
    for (const auto& t : doc.extra) {
        os << '\n';
        detail::write_csv_table(os, t);
    }
}

// JSON: a single object {"meta": {...}, "rows": [...], <extra>: [...]}.
inline void write_json(std::ostream& os, const Document& doc) {
    os << "{\"meta\":{";
    os << "\"version\":" << nlohmann::json(kVersion).dump();
    for (const auto& [key, value] : doc.meta) {
        os << ',' << nlohmann::json(key).dump() << ':' << detail::json_cell(value);
    }
    os << "},\n\"rows\":";
    detail::write_json_table(os, doc.rows);
    for (const auto& t : doc.extra) {
        os << ",\n" << nlohmann::json(t.name).dump() << ':';
        detail::write_json_table(os, t);
    }
    os << "}\n";
}

inline void write(std::ostream& os, const Document& doc, Format f) {
    if (f == Format::Csv) {
        write_csv(os, doc);
    } else {
        write_json(os, doc);
    }
}

} // namespace sitnikov::io
