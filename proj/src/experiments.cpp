// experiments.cpp — Time traces, sweeps, scans and the verification suite

#include "abdqd/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include <fmt/format.h>

#include "abdqd/analytics.hpp"
#include "abdqd/oracle.hpp"
#include "abdqd/propagator.hpp"
#include "abdqd/state.hpp"

namespace abdqd {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double nan = std::numeric_limits<double>::quiet_NaN();

// Evaluates fn(0..n-1) on a small thread pool. Results keep their index; the
// lowest-index exception, if any, is rethrown.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& fn)
{
    std::vector<T> results(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

LinewidthConvention convention_of(const RunConfig& config)
{
    return config.debug_full_linewidth ? LinewidthConvention::printed_full : LinewidthConvention::half;
}

double phase_or_nan(const ReducedDensityMatrix& rho)
{
    if (std::abs(rho.rho21) <= default_phase_floor) return nan;
    return coherence_phase(rho);
}

DeviceParams centred(DeviceParams d)
{
    const double de = d.delta_e();
    d.e1 = 0.5 * de;
    d.e2 = -0.5 * de;
    return d;
}

bool is_centred(const DeviceParams& d) { return std::abs(d.e1 + d.e2) <= 1e-12 * d.gamma(); }

} // namespace

ResultTable cmd_time_trace(const RunConfig& config)
{
    ResultTable table({{"t", "1/energy"},
                       {"rho00", "1"},
                       {"rho11", "1"},
                       {"rho22", "1"},
                       {"rho33", "1"},
                       {"re_rho21", "1"},
                       {"im_rho21", "1"},
                       {"rx", "1"},
                       {"ry", "1"},
                       {"rz", "1"},
                       {"leakage", "1"},
                       {"phase", "rad"},
                       {"fidelity", "1"}});
    stamp_metadata(table, "time-trace", config);

    const BathParams bath = config.bath();
    const LinewidthConvention conv = convention_of(config);
    const std::vector<double> times = config.time_grid.points();
    auto rows = parallel_map<std::vector<double>>(times.size(), [&](std::size_t i) {
        const double t = times[i];
        OccupationMatrix v;
        try {
            v = occupation_v(config.device, bath, t, config.quad, conv);
        } catch (const QuadratureNotConverged& e) {
            throw QuadratureNotConverged(fmt::format("{} at t = {}", e.what(), t), e.achieved_error(), e.panels());
        }
        const ReducedDensityMatrix rho = assemble_rho(v);
        const BlochState b = bloch_vector(rho);
        return std::vector<double>{t,
                                   rho.rho00,
                                   rho.rho11,
                                   rho.rho22,
                                   rho.rho33,
                                   rho.rho21.real(),
                                   rho.rho21.imag(),
                                   b.r[0],
                                   b.r[1],
                                   b.r[2],
                                   b.leakage,
                                   phase_or_nan(rho),
                                   fidelity_to_target(rho, config.device.phi)};
    });
    for (auto& r : rows) table.add_row(std::move(r));
    return table;
}

ResultTable cmd_flux_sweep(const RunConfig& config)
{
    ResultTable table({{"phi", "rad"},
                       {"re_rho21", "1"},
                       {"im_rho21", "1"},
                       {"abs_rho21", "1"},
                       {"phase", "rad"},
                       {"fidelity_to_psi_phi", "1"},
                       {"closed_form_re", "1"},
                       {"closed_form_im", "1"}});
    stamp_metadata(table, "flux-sweep", config);
    table.set_meta("closed_form", "zero-temperature stationary rho21 at the same bias; NaN unless e1 + e2 = 0");

    const BathParams bath = config.bath();
    const LinewidthConvention conv = convention_of(config);
    const std::vector<double> phis = config.flux_grid.points();
    auto rows = parallel_map<std::vector<double>>(phis.size(), [&](std::size_t i) {
        DeviceParams d = config.device;
        d.phi = phis[i];
        const ReducedDensityMatrix rho = assemble_rho(steady_v(d, bath, config.quad, conv));
        Complex closed{nan, nan};
        if (is_centred(d)) closed = steady_rho21_closed(d, config.bias);
        return std::vector<double>{d.phi,
                                   rho.rho21.real(),
                                   rho.rho21.imag(),
                                   std::abs(rho.rho21),
                                   phase_or_nan(rho),
                                   fidelity_to_target(rho, d.phi),
                                   closed.real(),
                                   closed.imag()};
    });
    for (auto& r : rows) table.add_row(std::move(r));
    return table;
}

ResultTable cmd_transmission_scan(const RunConfig& config)
{
    ResultTable table({{"omega", "energy"}, {"phi", "rad"}, {"T", "1"}});
    stamp_metadata(table, "transmission", config);
    table.set_meta("levels", "evaluated with e1 = -e2 = (e1 - e2)/2");

    const std::vector<double> phis = config.flux_grid.points();
    const std::vector<double> omegas = config.omega_grid.points();
    for (double phi : phis) {
        DeviceParams d = config.device;
        d.phi = phi;
        for (double w : omegas) table.add_row({w, phi, transmission(d, w)});
    }
    return table;
}

ResultTable cmd_current_vs_flux(const RunConfig& config)
{
    ResultTable table({{"phi", "rad"}, {"I", "e*energy/hbar"}});
    stamp_metadata(table, "current", config);

    const BathParams bath = config.bath();
    const std::vector<double> phis = config.flux_grid.points();
    struct Pair {
        double current{0.0};
        double shifted{0.0};
    };
    auto values = parallel_map<Pair>(phis.size(), [&](std::size_t i) {
        DeviceParams d = config.device;
        d.phi = phis[i];
        Pair p;
        p.current = steady_current(d, bath, config.quad);
        d.phi += 2.0 * pi;
        p.shifted = steady_current(d, bath, config.quad);
        return p;
    });
    double residual = 0.0;
    for (std::size_t i = 0; i < phis.size(); ++i) {
        table.add_row({phis[i], values[i].current});
        residual = std::max(residual, std::abs(values[i].current - values[i].shifted));
    }
    table.set_meta("period_residual", fmt::format("{}", residual));
    return table;
}

bool VerifyOutcome::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

VerifyOutcome cmd_verify(const RunConfig& config)
{
    const LinewidthConvention conv = convention_of(config);
    const BathParams bath = config.bath();
    VerifyOutcome outcome;
    auto record = [&](std::string name, double residual, double tolerance, std::string message) {
        const bool ok = residual <= tolerance;
        outcome.checks.push_back({std::move(name), residual, tolerance, ok, std::move(message)});
    };

    std::vector<double> quarter_turns;
    for (int k = -8; k <= 8; ++k) quarter_turns.push_back(0.25 * pi * k);

    // Stationary pipeline against the closed form at zero temperature.
    {
        const BathParams cold = BathParams::symmetric_bias(config.bias, 0.0, config.cutoff);
        QuadratureSpec quad = config.quad;
        quad.tail_correction = true;
        auto diffs = parallel_map<double>(quarter_turns.size(), [&](std::size_t i) {
            DeviceParams d = centred(config.device);
            d.phi = quarter_turns[i];
            const Complex pipeline = assemble_rho(steady_v(d, cold, quad, conv)).rho21;
            return std::abs(pipeline - steady_rho21_closed(d, config.bias));
        });
        const double worst = *std::max_element(diffs.begin(), diffs.end());
        record("closed_form", worst, 1e-6,
               fmt::format("max |rho21 pipeline - closed form| over phi = k pi/4, k = -8..8, T = 0: {:.3e}", worst));
    }

    // 4 pi periodicity of the stationary state.
    {
        auto diffs = parallel_map<double>(9, [&](std::size_t i) {
            DeviceParams d = config.device;
            d.phi = quarter_turns[i + 4];
            const ReducedDensityMatrix a = assemble_rho(steady_v(d, bath, config.quad, conv));
            d.phi += 4.0 * pi;
            const ReducedDensityMatrix b = assemble_rho(steady_v(d, bath, config.quad, conv));
            return max_elementwise_difference(a, b);
        });
        const double worst = *std::max_element(diffs.begin(), diffs.end());
        record("state_period_4pi", worst, 1e-9, fmt::format("max |rho(phi + 4 pi) - rho(phi)|: {:.3e}", worst));
    }

    // 2 pi periodicity of the current.
    {
        auto diffs = parallel_map<double>(9, [&](std::size_t i) {
            DeviceParams d = config.device;
            d.phi = quarter_turns[i + 4];
            const double a = steady_current(d, bath, config.quad);
            d.phi += 2.0 * pi;
            return std::abs(steady_current(d, bath, config.quad) - a);
        });
        const double worst = *std::max_element(diffs.begin(), diffs.end());
        record("current_period_2pi", worst, 1e-10, fmt::format("max |I(phi + 2 pi) - I(phi)|: {:.3e}", worst));
    }

    // Transmission stays a probability.
    {
        double excess = 0.0;
        std::string message = "T(omega, phi) within [0, 1] on the omega x phi grid";
        try {
            for (double phi : config.flux_grid.points()) {
                DeviceParams d = config.device;
                d.phi = phi;
                for (double w : config.omega_grid.points()) {
                    const double t = transmission(d, w);
                    excess = std::max({excess, -t, t - 1.0});
                }
            }
        } catch (const UnitarityViolation& e) {
            excess = std::numeric_limits<double>::infinity();
            message = e.what();
        }
        record("transmission_unitarity", excess, 1e-12, message);
    }

    // Invariants of v(t) and rho(t) over random parameters.
    {
        constexpr int draws = 100;
        std::mt19937_64 rng(config.seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        struct Draw {
            DeviceParams d;
            BathParams b;
            double t;
        };
        std::vector<Draw> cases;
        while (static_cast<int>(cases.size()) < draws) {
            Draw c;
            c.d.gamma_l = unit(rng);
            c.d.gamma_r = unit(rng);
            c.d.phi = -4.0 * pi + 8.0 * pi * unit(rng);
            const double de = -2.0 + 4.0 * unit(rng);
            c.d.e1 = 0.5 * de;
            c.d.e2 = -0.5 * de;
            c.b = BathParams::symmetric_bias(10.0 * unit(rng), unit(rng), config.cutoff);
            c.t = 10.0 * unit(rng);
            if (c.d.gamma() < 1e-3) continue;
            cases.push_back(c);
        }
        auto bad = parallel_map<int>(cases.size(), [&](std::size_t i) {
            const Draw& c = cases[i];
            const OccupationMatrix v = occupation_v(c.d, c.b, c.t, config.quad, conv);
            const auto ev = v.eigenvalues();
            if (v.hermiticity_defect() > config.quad.abs_tol) return 1;
            if (ev[0] < -1e-8 || ev[1] > 1.0 + 1e-8) return 1;
            const ReducedDensityMatrix rho = assemble_rho(v);
            if (std::abs(rho.trace() - 1.0) > 1e-9) return 1;
            if (std::norm(rho.rho21) > rho.rho11 * rho.rho22 + 1e-10) return 1;
            return 0;
        });
        int failures = 0;
        for (int b : bad) failures += b;
        record("invariant_fuzz", failures, 0.0,
               fmt::format("{} of {} random draws (seed {}) violate an invariant of v(t) or rho(t)", failures, draws,
                           config.seed));
    }

    // Brute-force discretised leads.
    {
        const int n = config.oracle.n_modes;
        try {
            const OracleComparison cmp = compare_with_pipeline(config.device, bath, config.quad, n,
                                                               config.oracle.lead_bandwidth, {0.5, 1.0, 2.0, 3.0}, conv);
            const double worst = cmp.max_residual();
            std::string message =
                fmt::format("oracle with N = {} modes per lead, lead half-bandwidth {}: max residual {:.4f} over t = "
                            "0.5, 1, 2, 3",
                            n, config.oracle.lead_bandwidth, worst);
            if (worst > 0.02) message += fmt::format("; above tolerance 0.02 with N = {} modes per lead", n);
            record("oracle", worst, 0.02, message);
        } catch (const std::domain_error& e) {
            record("oracle", std::numeric_limits<double>::infinity(), 0.02, e.what());
        }
    }

    ResultTable table({{"check", "index"}, {"residual", "1"}, {"tolerance", "1"}, {"pass", "bool"}});
    stamp_metadata(table, "verify", config);
    if (config.debug_full_linewidth) table.set_meta("debug", "full linewidth on the diagonal of M");
    for (std::size_t i = 0; i < outcome.checks.size(); ++i) {
        const VerifyCheck& c = outcome.checks[i];
        table.set_meta(fmt::format("check.{}", i + 1), fmt::format("{}: {}", c.name, c.message));
        table.add_row({static_cast<double>(i + 1), c.residual, c.tolerance, c.passed ? 1.0 : 0.0});
    }
    outcome.table = std::move(table);
    return outcome;
}

} // namespace abdqd
