// abdqd_cli.cpp — Command-line front end
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 verification failure.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "abdqd/analytics.hpp"
#include "abdqd/config.hpp"
#include "abdqd/experiments.hpp"
#include "abdqd/quadrature.hpp"
#include "abdqd/state.hpp"

namespace {

struct FlagSpec {
    const char* key;
    const char* help;
};

const std::vector<FlagSpec> flags = {
    {"e1", "level of dot 1"},
    {"e2", "level of dot 2"},
    {"gamma-l", "linewidth from the left lead"},
    {"gamma-r", "linewidth from the right lead"},
    {"phi", "AB phase, e.g. -pi/2"},
    {"bias", "eV, applied as mu_L = eV/2 = -mu_R"},
    {"temperature", "k_B T"},
    {"cutoff", "half-width D of the frequency window"},
    {"abs-tol", "quadrature absolute tolerance"},
    {"rel-tol", "quadrature relative tolerance"},
    {"max-panels", "quadrature panel budget"},
    {"tail-correction", "integrate the frequency tails beyond the window (true/false)"},
    {"t-max", "last time of the trace"},
    {"n-t", "number of time points"},
    {"phi-min", "first flux point"},
    {"phi-max", "last flux point"},
    {"n-phi", "number of flux points"},
    {"w-min", "first frequency point"},
    {"w-max", "last frequency point"},
    {"n-w", "number of frequency points"},
    {"oracle-modes", "modes per lead in the brute-force check"},
    {"oracle-bandwidth", "half-bandwidth of the discretised leads"},
    {"out", "output file (default stdout)"},
    {"format", "csv or json"},
    {"seed", "seed for randomised checks"},
};

int run(const std::string& command, const abdqd::RunConfig& config)
{
    using namespace abdqd;
    if (command == "verify") {
        const VerifyOutcome outcome = cmd_verify(config);
        write_table(outcome.table, config, std::cout);
        for (const auto& c : outcome.checks) {
            std::cerr << fmt::format("{} {} residual={:.3e} tolerance={:.0e}  {}\n", c.passed ? "PASS" : "FAIL",
                                     c.name, c.residual, c.tolerance, c.message);
        }
        return outcome.passed() ? 0 : 3;
    }
    ResultTable table;
    if (command == "time-trace") table = cmd_time_trace(config);
    else if (command == "flux-sweep") table = cmd_flux_sweep(config);
    else if (command == "transmission") table = cmd_transmission_scan(config);
    else if (command == "current") table = cmd_current_vs_flux(config);
    write_table(table, config, std::cout);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Open-system dynamics of a double quantum dot in an Aharonov-Bohm ring"};
    app.require_subcommand(1);

    std::map<std::string, std::string> values;
    for (const auto& f : flags) app.add_option(std::string("--") + f.key, values[f.key], f.help);
    std::string config_path;
    app.add_option("--config", config_path, "flat key = value settings file; flags override it");
    bool debug_full_linewidth = false;
    app.add_flag("--debug-full-linewidth", debug_full_linewidth)->group("");

    const std::vector<std::pair<const char*, const char*>> commands = {
        {"time-trace", "rho(t) from an empty device"},
        {"flux-sweep", "stationary rho21 against the AB phase"},
        {"transmission", "T(omega, phi) on the omega x phi grid"},
        {"current", "stationary current against the AB phase"},
        {"verify", "closed-form, periodicity and brute-force checks"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    abdqd::RunConfig config;
    try {
        if (!config_path.empty()) {
            for (const auto& [k, v] : abdqd::read_config_file(config_path)) abdqd::apply_setting(config, k, v);
        }
        for (const auto& f : flags) {
            if (app.count(std::string("--") + f.key) > 0) abdqd::apply_setting(config, f.key, values[f.key]);
        }
    } catch (const abdqd::ConfigError& e) {
        std::cerr << "abdqd: " << e.what() << '\n';
        return 1;
    }
    config.debug_full_linewidth = debug_full_linewidth;

    const abdqd::ValidationReport report = abdqd::validate(config);
    if (!report.ok()) {
        std::cerr << "abdqd: invalid configuration: " << report.summary() << '\n';
        return 1;
    }

    try {
        return run(command, config);
    } catch (const abdqd::QuadratureNotConverged& e) {
        std::cerr << "abdqd: numerical failure: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        std::cerr << "abdqd: numerical failure: " << e.what() << '\n';
    } catch (const std::runtime_error& e) {
        std::cerr << "abdqd: " << e.what() << '\n';
    }
    return 2;
}
