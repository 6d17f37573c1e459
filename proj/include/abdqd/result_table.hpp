// result_table.hpp — Tabular experiment output (CSV with '#' metadata, or JSON)
//
// CSV layout:
//   # key: value            metadata, one per line, always present
//   # units: u1,u2,...      one unit per column (always the last '#' line)
//   name1,name2,...         header
//   rows, numbers printed with round-trip precision; NaN marks undefined values

#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "abdqd/config.hpp"

namespace abdqd {

struct Column {
    std::string name;
    std::string unit;
};

class ResultTable {
public:
    ResultTable() = default;
    explicit ResultTable(std::vector<Column> columns) : columns_(std::move(columns)) {}

    const std::vector<Column>& columns() const { return columns_; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }
    const std::vector<std::pair<std::string, std::string>>& metadata() const { return metadata_; }

    // Throws std::invalid_argument if the row length differs from the column count.
    void add_row(std::vector<double> row);
    // Replaces an existing key, otherwise appends.
    void set_meta(const std::string& key, const std::string& value);
    std::string meta(const std::string& key) const; // empty if absent
    int column_index(const std::string& name) const; // -1 if absent
    std::vector<double> column(const std::string& name) const;

    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;

private:
    std::vector<Column> columns_;
    std::vector<std::vector<double>> rows_;
    std::vector<std::pair<std::string, std::string>> metadata_;
};

// Standard metadata block: program version, command name, conventions and the full config.
void stamp_metadata(ResultTable& table, const std::string& command, const RunConfig& config);

void write_table(const ResultTable& table, const RunConfig& config, std::ostream& fallback);

// Inverse of write_csv. Throws std::invalid_argument on a malformed file.
ResultTable read_csv(std::istream& in);

} // namespace abdqd
