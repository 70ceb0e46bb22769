/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>
#include <variant>
#include <vector>

namespace beamsweep {

/// One table cell: a label or a number printed with 6 significant digits.
using CsvValue = std::variant<std::string, double, long>;

/// Deterministic %.6g rendering shared by the CSV and JSON writers.
std::string format_number(double v);

/// Rows of labeled values; renders to CSV (header mandatory, '\n' endings)
/// or to a JSON array with one object per row.
class Table {
  public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add_row(std::vector<CsvValue> row);

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<CsvValue>>& rows() const { return rows_; }

    std::string to_csv() const;
    std::string to_json() const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::vector<CsvValue>> rows_;
};

}  // namespace beamsweep
