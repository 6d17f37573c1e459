// result_table.cpp — CSV/JSON writers

#include "abdqd/result_table.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace abdqd {

namespace {

std::string number(double x)
{
    if (std::isnan(x)) return "NaN";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return fmt::format("{}", x); // shortest round-trip form
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_number(const std::string& cell, std::size_t line_no)
{
    if (cell == "NaN") return std::nan("");
    if (cell == "inf") return std::numeric_limits<double>::infinity();
    if (cell == "-inf") return -std::numeric_limits<double>::infinity();
    double x = 0.0;
    const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), x);
    if (ec != std::errc{} || end != cell.data() + cell.size()) {
        throw std::invalid_argument(fmt::format("line {}: '{}' is not a number", line_no, cell));
    }
    return x;
}

} // namespace

void ResultTable::add_row(std::vector<double> row)
{
    if (row.size() != columns_.size()) {
        throw std::invalid_argument(
            fmt::format("row has {} values but the table has {} columns", row.size(), columns_.size()));
    }
    rows_.push_back(std::move(row));
}

void ResultTable::set_meta(const std::string& key, const std::string& value)
{
    for (auto& [k, v] : metadata_) {
        if (k == key) {
            v = value;
            return;
        }
    }
    metadata_.emplace_back(key, value);
}

std::string ResultTable::meta(const std::string& key) const
{
    for (const auto& [k, v] : metadata_) {
        if (k == key) return v;
    }
    return {};
}

int ResultTable::column_index(const std::string& name) const
{
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

std::vector<double> ResultTable::column(const std::string& name) const
{
    const int i = column_index(name);
    if (i < 0) throw std::out_of_range(fmt::format("no column '{}'", name));
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r[i]);
    return out;
}

void ResultTable::write_csv(std::ostream& out) const
{
    for (const auto& [k, v] : metadata_) out << "# " << k << ": " << v << '\n';
    out << "# units: ";
    for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i].unit;
    out << '\n';
    for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i].name;
    out << '\n';
    for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << number(r[i]);
        out << '\n';
    }
}

void ResultTable::write_json(std::ostream& out) const
{
    nlohmann::ordered_json j;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : metadata_) meta[k] = v;
    j["metadata"] = meta;
    j["columns"] = nlohmann::ordered_json::array();
    for (const auto& c : columns_) j["columns"].push_back({{"name", c.name}, {"unit", c.unit}});
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows_) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (double x : r) {
            if (std::isfinite(x)) row.push_back(x);
            else row.push_back(nullptr);
        }
        j["rows"].push_back(std::move(row));
    }
    out << j.dump(1) << '\n';
}

void stamp_metadata(ResultTable& table, const std::string& command, const RunConfig& config)
{
    table.set_meta("program", fmt::format("abdqd {}", version_string));
    table.set_meta("command", command);
    table.set_meta("unit_system", "hbar = e = k_B = 1; one shared energy unit, time in its inverse");
    table.set_meta("convention", "M = i diag(E1,E2) + (1/2)[[G, Gc],[Gc*, G]], Gc = G cos(phi/2) + i dG sin(phi/2); "
                                 "rho21 = <2|rho|1> = <a2^dag a1>; mu_L = bias/2 = -mu_R");
    table.set_meta("phase", "arg(rho21) in (-pi, pi]; NaN when |rho21| <= 1e-9");
    for (const auto& [k, v] : config_entries(config)) table.set_meta("config." + k, v);
}

void write_table(const ResultTable& table, const RunConfig& config, std::ostream& fallback)
{
    auto emit = [&](std::ostream& out) {
        if (config.format == OutputFormat::json) table.write_json(out);
        else table.write_csv(out);
    };
    if (config.output_path.empty() || config.output_path == "-") {
        emit(fallback);
        return;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", config.output_path));
    emit(file);
}

ResultTable read_csv(std::istream& in)
{
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> units;
    std::vector<std::string> names;
    ResultTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (names.empty() && line.rfind("# ", 0) == 0) {
            const auto colon = line.find(": ");
            if (colon == std::string::npos) {
                throw std::invalid_argument(fmt::format("line {}: metadata line without ': '", line_no));
            }
            const std::string key = line.substr(2, colon - 2);
            const std::string value = line.substr(colon + 2);
            if (key == "units") units = split(value);
            else meta.emplace_back(key, value);
            continue;
        }
        if (names.empty()) {
            names = split(line);
            if (!units.empty() && units.size() != names.size()) {
                throw std::invalid_argument(
                    fmt::format("{} units for {} columns", units.size(), names.size()));
            }
            std::vector<Column> cols;
            for (std::size_t i = 0; i < names.size(); ++i) cols.push_back({names[i], units.empty() ? "" : units[i]});
            table = ResultTable(std::move(cols));
            continue;
        }
        const auto cells = split(line);
        if (cells.size() != names.size()) {
            throw std::invalid_argument(
                fmt::format("line {}: {} values for {} columns", line_no, cells.size(), names.size()));
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) row.push_back(parse_number(c, line_no));
        table.add_row(std::move(row));
    }
    for (const auto& [k, v] : meta) table.set_meta(k, v);
    return table;
}

} // namespace abdqd
