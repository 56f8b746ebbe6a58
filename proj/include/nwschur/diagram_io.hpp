#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nwschur/diagram.hpp"
#include "nwschur/errors.hpp"

namespace nwschur {

/// Grid format: one text row per diagram row, 'X' marks a square, '.' an
/// empty cell.  Columns are read top to bottom, 1-based.  Grid columns
/// holding no square are skipped.
inline Diagram parse_grid(const std::string& text, int n_rows_override = 0) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();

    std::size_t width = 0;
    for (std::size_t r = 0; r < lines.size(); ++r) {
        for (std::size_t c = 0; c < lines[r].size(); ++c) {
            char ch = lines[r][c];
            if (ch != 'X' && ch != '.' && ch != ' ')
                throw ParseError("grid line " + std::to_string(r + 1) + ", column " + std::to_string(c + 1) +
                                 ": expected 'X' or '.', got '" + std::string(1, ch) + "'");
        }
        width = std::max(width, lines[r].size());
    }

    std::vector<Column> columns;
    for (std::size_t c = 0; c < width; ++c) {
        Column col;
        for (std::size_t r = 0; r < lines.size(); ++r)
            if (c < lines[r].size() && lines[r][c] == 'X') col.push_back(static_cast<int>(r) + 1);
        if (!col.empty()) columns.push_back(std::move(col));
    }

    int max_row = 0;
    for (const Column& c : columns) max_row = std::max(max_row, c.back());
    int n_rows = n_rows_override > 0 ? n_rows_override : max_row;
    if (max_row > n_rows)
        throw ParseError("grid uses row " + std::to_string(max_row) + " but n_rows is " + std::to_string(n_rows));
    return Diagram(std::move(columns), n_rows);
}

/// JSON format: {"n_rows": N, "columns": [[rows...], ...]}.  Column arrays
/// are taken verbatim; they must be strictly increasing and non-empty.
inline Diagram parse_diagram_json(const nlohmann::json& j, int n_rows_override = 0) {
    if (!j.is_object() || !j.contains("columns"))
        throw ParseError("diagram JSON must be an object with a \"columns\" array");
    const auto& jcols = j.at("columns");
    if (!jcols.is_array()) throw ParseError("\"columns\" must be an array of integer arrays");

    std::vector<Column> columns;
    for (const auto& jc : jcols) {
        if (!jc.is_array()) throw ParseError("each column must be an array of integers");
        Column col;
        for (const auto& jv : jc) {
            if (!jv.is_number_integer()) throw ParseError("column entries must be integers");
            int v = jv.get<int>();
            if (v < 1) throw ParseError("row indices are 1-based and positive");
            col.push_back(v);
        }
        if (col.empty()) throw ParseError("empty columns are not stored; omit them instead");
        for (std::size_t k = 1; k < col.size(); ++k)
            if (col[k] <= col[k - 1]) throw ParseError("column entries must be strictly increasing");
        columns.push_back(std::move(col));
    }

    int max_row = 0;
    for (const Column& c : columns) max_row = std::max(max_row, c.back());
    int n_rows = max_row;
    if (j.contains("n_rows")) {
        if (!j.at("n_rows").is_number_integer()) throw ParseError("\"n_rows\" must be an integer");
        n_rows = j.at("n_rows").get<int>();
    }
    if (n_rows_override > 0) n_rows = n_rows_override;
    if (max_row > n_rows)
        throw ParseError("column uses row " + std::to_string(max_row) + " but n_rows is " + std::to_string(n_rows));
    return Diagram(std::move(columns), n_rows);
}

/// Accepts either format, sniffing JSON by a leading '{'.
inline Diagram parse_diagram(const std::string& text, int n_rows_override = 0) {
    std::size_t k = text.find_first_not_of(" \t\r\n");
    if (k != std::string::npos && text[k] == '{') {
        nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ParseError("invalid JSON");
        return parse_diagram_json(j, n_rows_override);
    }
    return parse_grid(text, n_rows_override);
}

inline nlohmann::json diagram_to_json(const Diagram& d) {
    nlohmann::json j;
    j["n_rows"] = d.n_rows();
    j["columns"] = nlohmann::json::array();
    for (const Column& c : d.columns()) j["columns"].push_back(c);
    return j;
}

inline std::string diagram_to_grid(const Diagram& d) {
    std::string out;
    for (int i = 1; i <= std::max(d.max_row(), d.empty() ? 0 : 1); ++i) {
        for (std::size_t j = 1; j <= d.column_count(); ++j)
            out.push_back(d.contains(i, static_cast<int>(j)) ? 'X' : '.');
        out.push_back('\n');
    }
    return out;
}

} // namespace nwschur
