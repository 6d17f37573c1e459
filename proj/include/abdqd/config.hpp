// config.hpp — Run configuration for the command-line experiments
//
// Settings come from three layers, later ones winning: built-in defaults, a
// flat `key = value` file, command-line flags. Keys are the long flag names
// without the leading dashes (gamma-l, t-max, ...).

#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abdqd/core.hpp"
#include "abdqd/quadrature.hpp"

namespace abdqd {

inline constexpr const char* version_string = "0.1.0";

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct TimeGrid {
    double t_max{6.0};
    int n_points{121};
    std::vector<double> points() const; // 0 .. t_max inclusive
};

struct FluxGrid {
    double phi_min{-2.0 * std::numbers::pi};
    double phi_max{2.0 * std::numbers::pi};
    int n_points{33};
    std::vector<double> points() const;
};

struct OmegaGrid {
    double w_min{-10.0};
    double w_max{10.0};
    int n_points{201};
    std::vector<double> points() const;
};

struct OracleOptions {
    int n_modes{400};
    double lead_bandwidth{20.0};
};

enum class OutputFormat { csv, json };

struct RunConfig {
    DeviceParams device{0.0, 0.0, 0.95, 0.05, -0.5 * std::numbers::pi};
    double bias{6.0}; // mu_L = bias/2 = -mu_R
    double temperature{0.05};
    double cutoff{50.0};
    QuadratureSpec quad{};
    TimeGrid time_grid{};
    FluxGrid flux_grid{};
    OmegaGrid omega_grid{};
    OracleOptions oracle{};
    std::string output_path; // empty: stdout
    OutputFormat format{OutputFormat::csv};
    std::uint64_t seed{0};
    bool debug_full_linewidth{false};

    BathParams bath() const { return BathParams::symmetric_bias(bias, temperature, cutoff); }
};

// Parses a real number, also accepting multiples of pi: "pi", "-pi/2", "3pi/4", "0.5*pi".
double parse_real(const std::string& text);

// Applies one setting. Throws ConfigError for unknown keys or bad values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

// Reads `key = value` lines; blank lines and '#' comments are skipped.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path);

// Every setting of the resolved config as (key, value) text, in a fixed order.
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& config);

// Physical validation plus grid sanity.
ValidationReport validate(const RunConfig& config);

} // namespace abdqd
