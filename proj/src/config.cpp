// config.cpp — Run configuration parsing and echo

#include "abdqd/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>

#include <fmt/format.h>

namespace abdqd {

namespace {

std::vector<double> linspace(double lo, double hi, int n)
{
    std::vector<double> out;
    if (n <= 0) return out;
    if (n == 1) return {lo};
    out.reserve(n);
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) out.push_back(i == n - 1 ? hi : lo + i * step);
    return out;
}

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

double parse_plain(const std::string& text, const std::string& whole)
{
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) throw ConfigError(fmt::format("not a number: '{}'", whole));
    return value;
}

int parse_int(const std::string& text)
{
    const double v = parse_real(text);
    if (v != std::floor(v) || std::abs(v) > 1e9) throw ConfigError(fmt::format("not an integer: '{}'", text));
    return static_cast<int>(v);
}

bool parse_bool(const std::string& text)
{
    const std::string t = lower(trim(text));
    if (t == "1" || t == "true" || t == "yes" || t == "on") return true;
    if (t == "0" || t == "false" || t == "no" || t == "off") return false;
    throw ConfigError(fmt::format("not a boolean: '{}'", text));
}

std::string show(double x) { return fmt::format("{}", x); }

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters()
{
    static const std::map<std::string, Setter> table = {
        {"e1", [](RunConfig& c, const std::string& v) { c.device.e1 = parse_real(v); }},
        {"e2", [](RunConfig& c, const std::string& v) { c.device.e2 = parse_real(v); }},
        {"gamma-l", [](RunConfig& c, const std::string& v) { c.device.gamma_l = parse_real(v); }},
        {"gamma-r", [](RunConfig& c, const std::string& v) { c.device.gamma_r = parse_real(v); }},
        {"phi", [](RunConfig& c, const std::string& v) { c.device.phi = parse_real(v); }},
        {"bias", [](RunConfig& c, const std::string& v) { c.bias = parse_real(v); }},
        {"temperature", [](RunConfig& c, const std::string& v) { c.temperature = parse_real(v); }},
        {"cutoff", [](RunConfig& c, const std::string& v) { c.cutoff = parse_real(v); }},
        {"abs-tol", [](RunConfig& c, const std::string& v) { c.quad.abs_tol = parse_real(v); }},
        {"rel-tol", [](RunConfig& c, const std::string& v) { c.quad.rel_tol = parse_real(v); }},
        {"max-panels", [](RunConfig& c, const std::string& v) { c.quad.max_panels = parse_int(v); }},
        {"tail-correction", [](RunConfig& c, const std::string& v) { c.quad.tail_correction = parse_bool(v); }},
        {"t-max", [](RunConfig& c, const std::string& v) { c.time_grid.t_max = parse_real(v); }},
        {"n-t", [](RunConfig& c, const std::string& v) { c.time_grid.n_points = parse_int(v); }},
        {"phi-min", [](RunConfig& c, const std::string& v) { c.flux_grid.phi_min = parse_real(v); }},
        {"phi-max", [](RunConfig& c, const std::string& v) { c.flux_grid.phi_max = parse_real(v); }},
        {"n-phi", [](RunConfig& c, const std::string& v) { c.flux_grid.n_points = parse_int(v); }},
        {"w-min", [](RunConfig& c, const std::string& v) { c.omega_grid.w_min = parse_real(v); }},
        {"w-max", [](RunConfig& c, const std::string& v) { c.omega_grid.w_max = parse_real(v); }},
        {"n-w", [](RunConfig& c, const std::string& v) { c.omega_grid.n_points = parse_int(v); }},
        {"oracle-modes", [](RunConfig& c, const std::string& v) { c.oracle.n_modes = parse_int(v); }},
        {"oracle-bandwidth", [](RunConfig& c, const std::string& v) { c.oracle.lead_bandwidth = parse_real(v); }},
        {"out", [](RunConfig& c, const std::string& v) { c.output_path = trim(v); }},
        {"format",
         [](RunConfig& c, const std::string& v) {
             const std::string f = lower(trim(v));
             if (f == "csv") c.format = OutputFormat::csv;
             else if (f == "json") c.format = OutputFormat::json;
             else throw ConfigError(fmt::format("unknown format '{}' (csv or json)", v));
         }},
        {"seed",
         [](RunConfig& c, const std::string& v) {
             const std::string t = trim(v);
             std::uint64_t s = 0;
             const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), s);
             if (ec != std::errc() || ptr != t.data() + t.size()) {
                 throw ConfigError(fmt::format("not a seed: '{}'", v));
             }
             c.seed = s;
         }},
    };
    return table;
}

} // namespace

std::vector<double> TimeGrid::points() const { return linspace(0.0, t_max, n_points); }
std::vector<double> FluxGrid::points() const { return linspace(phi_min, phi_max, n_points); }
std::vector<double> OmegaGrid::points() const { return linspace(w_min, w_max, n_points); }

double parse_real(const std::string& raw)
{
    std::string s = lower(trim(raw));
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw ConfigError("empty number");

    const auto pi_pos = s.find("pi");
    if (pi_pos == std::string::npos) return parse_plain(s, raw);

    // [sign][coef][*]pi[/den]
    std::string coef = s.substr(0, pi_pos);
    std::string rest = s.substr(pi_pos + 2);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    double factor = 1.0;
    if (coef == "-") factor = -1.0;
    else if (coef == "+" || coef.empty()) factor = 1.0;
    else factor = parse_plain(coef, raw);
    double den = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') throw ConfigError(fmt::format("not a number: '{}'", raw));
        den = parse_plain(rest.substr(1), raw);
        if (den == 0.0) throw ConfigError(fmt::format("division by zero in '{}'", raw));
    }
    return factor * std::numbers::pi / den;
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value)
{
    const auto& table = setters();
    const auto it = table.find(trim(key));
    if (it == table.end()) throw ConfigError(fmt::format("unknown setting '{}'", key));
    try {
        it->second(config, value);
    } catch (const ConfigError& e) {
        throw ConfigError(fmt::format("{}: {}", trim(key), e.what()));
    }
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path.string()));
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(fmt::format("{}:{}: expected 'key = value'", path.string(), number));
        }
        out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& c)
{
    return {
        {"e1", show(c.device.e1)},
        {"e2", show(c.device.e2)},
        {"gamma-l", show(c.device.gamma_l)},
        {"gamma-r", show(c.device.gamma_r)},
        {"phi", show(c.device.phi)},
        {"bias", show(c.bias)},
        {"temperature", show(c.temperature)},
        {"cutoff", show(c.cutoff)},
        {"abs-tol", show(c.quad.abs_tol)},
        {"rel-tol", show(c.quad.rel_tol)},
        {"max-panels", std::to_string(c.quad.max_panels)},
        {"tail-correction", c.quad.tail_correction ? "true" : "false"},
        {"t-max", show(c.time_grid.t_max)},
        {"n-t", std::to_string(c.time_grid.n_points)},
        {"phi-min", show(c.flux_grid.phi_min)},
        {"phi-max", show(c.flux_grid.phi_max)},
        {"n-phi", std::to_string(c.flux_grid.n_points)},
        {"w-min", show(c.omega_grid.w_min)},
        {"w-max", show(c.omega_grid.w_max)},
        {"n-w", std::to_string(c.omega_grid.n_points)},
        {"oracle-modes", std::to_string(c.oracle.n_modes)},
        {"oracle-bandwidth", show(c.oracle.lead_bandwidth)},
        {"format", c.format == OutputFormat::csv ? "csv" : "json"},
        {"seed", std::to_string(c.seed)},
    };
}

ValidationReport validate(const RunConfig& c)
{
    ValidationReport report = validate(c.device, c.bath());
    auto& v = report.violations;
    if (!(c.quad.abs_tol > 0.0) || !(c.quad.rel_tol > 0.0)) v.push_back("quadrature tolerances must be positive");
    if (c.quad.max_panels < 1) v.push_back("max-panels must be at least 1");
    if (!(c.time_grid.t_max > 0.0)) v.push_back("t-max must be positive");
    if (c.time_grid.n_points < 1) v.push_back("n-t must be at least 1");
    if (c.flux_grid.n_points < 1) v.push_back("n-phi must be at least 1");
    if (!(c.flux_grid.phi_max >= c.flux_grid.phi_min)) v.push_back("phi-max must not be below phi-min");
    if (c.omega_grid.n_points < 1) v.push_back("n-w must be at least 1");
    if (!(c.omega_grid.w_max >= c.omega_grid.w_min)) v.push_back("w-max must not be below w-min");
    if (c.oracle.n_modes < 2) v.push_back("oracle-modes must be at least 2");
    if (!(c.oracle.lead_bandwidth > 0.0)) v.push_back("oracle-bandwidth must be positive");
    return report;
}

} // namespace abdqd
