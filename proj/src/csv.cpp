/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "beamsweep/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace beamsweep {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

namespace {

std::string render(const CsvValue& v) {
    if (std::holds_alternative<std::string>(v)) {
        return std::get<std::string>(v);
    }
    if (std::holds_alternative<long>(v)) {
        return std::to_string(std::get<long>(v));
    }
    return format_number(std::get<double>(v));
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    return out;
}

std::string render_json(const CsvValue& v) {
    if (std::holds_alternative<std::string>(v)) {
        return "\"" + json_escape(std::get<std::string>(v)) + "\"";
    }
    return render(v);
}

}  // namespace

void Table::add_row(std::vector<CsvValue> row) {
    if (row.size() != columns_.size()) {
        throw std::invalid_argument("Table::add_row: column count mismatch");
    }
    rows_.push_back(std::move(row));
}

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c != 0) {
            out.push_back(',');
        }
        out += columns_[c];
    }
    out.push_back('\n');
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c != 0) {
                out.push_back(',');
            }
            out += render(row[c]);
        }
        out.push_back('\n');
    }
    return out;
}

std::string Table::to_json() const {
    std::string out = "[\n";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        out += "  {";
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            if (c != 0) {
                out += ", ";
            }
            out += "\"" + json_escape(columns_[c]) + "\": " + render_json(rows_[r][c]);
        }
        out += r + 1 == rows_.size() ? "}\n" : "},\n";
    }
    out += "]\n";
    return out;
}

}  // namespace beamsweep
