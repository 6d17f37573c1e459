#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "abdqd/analytics.hpp"
#include "abdqd/core.hpp"
#include "abdqd/state.hpp"

using namespace abdqd;

namespace {
bool mentions(const ValidationReport& r, const std::string& needle)
{
    for (const auto& v : r.violations) {
        if (v.find(needle) != std::string::npos) return true;
    }
    return false;
}
} // namespace

TEST_CASE("derived device quantities")
{
    DeviceParams d{1.5, -0.5, 0.95, 0.05, 0.3};
    CHECK(d.gamma() == doctest::Approx(1.0));
    CHECK(d.delta_gamma() == doctest::Approx(0.9));
    CHECK(d.delta_e() == doctest::Approx(2.0));
    CHECK(d.linewidth(Lead::left) == 0.95);
    CHECK(d.linewidth(Lead::right) == 0.05);
    CHECK(std::abs(d.delta_gamma()) <= d.gamma());

    const DeviceParams g = DeviceParams::degenerate(2.0, 0.5, 1.0);
    CHECK(g.gamma_l == doctest::Approx(1.25));
    CHECK(g.gamma_r == doctest::Approx(0.75));
    CHECK(g.delta_e() == 0.0);
}

TEST_CASE("symmetric bias helper")
{
    const BathParams b = BathParams::symmetric_bias(6.0, 0.05);
    CHECK(b.mu_l == 3.0);
    CHECK(b.mu_r == -3.0);
    CHECK(b.bias() == 6.0);
    CHECK(b.cutoff == 50.0);
}

TEST_CASE("fermi function")
{
    CHECK(fermi(-1.0, 0.0, 0.0) == 1.0);
    CHECK(fermi(1.0, 0.0, 0.0) == 0.0);
    CHECK(fermi(0.0, 0.0, 0.0) == 0.5);
    CHECK(fermi(0.3, 0.3, 0.1) == doctest::Approx(0.5));
    CHECK(fermi(1.0, 0.0, 0.5) == doctest::Approx(1.0 / (std::exp(2.0) + 1.0)).epsilon(1e-14));
    CHECK(fermi(1e6, 0.0, 1e-3) == 0.0);
    CHECK(fermi(-1e6, 0.0, 1e-3) == 1.0);
    // particle-hole symmetry
    CHECK(fermi(0.7, 0.0, 0.2) + fermi(-0.7, 0.0, 0.2) == doctest::Approx(1.0));
}

TEST_CASE("phase from flux")
{
    CHECK(phase_from_flux(0.5) == doctest::Approx(std::numbers::pi));
    CHECK(phase_from_flux(1.0, 2.0) == doctest::Approx(std::numbers::pi));
}

TEST_CASE("validate")
{
    SUBCASE("zero coupling")
    {
        DeviceParams d{0, 0, 0.0, 0.0, 0};
        const auto r = validate(d, BathParams{});
        CHECK_FALSE(r.ok());
        CHECK(mentions(r, "must be positive"));
    }
    SUBCASE("canonical point is valid")
    {
        DeviceParams d{0, 0, 0.95, 0.05, -std::numbers::pi / 2};
        const auto r = validate(d, BathParams::symmetric_bias(6.0, 0.05, 50.0));
        CHECK(r.ok());
        CHECK(r.summary() == "ok");
    }
    SUBCASE("cutoff too small")
    {
        const auto r = validate(DeviceParams{}, BathParams::symmetric_bias(6.0, 0.05, 1.0));
        CHECK(mentions(r, "cutoff too small"));
    }
    SUBCASE("negative linewidth and temperature")
    {
        DeviceParams d{0, 0, -0.1, 1.0, 0};
        BathParams b;
        b.temperature = -1.0;
        const auto r = validate(d, b);
        CHECK(mentions(r, "gamma_l must be non-negative"));
        CHECK(mentions(r, "temperature"));
    }
    SUBCASE("non-finite input")
    {
        DeviceParams d;
        d.phi = std::nan("");
        CHECK(mentions(validate(d, BathParams{}), "finite"));
    }
    SUBCASE("inputs are not touched")
    {
        DeviceParams d{0, 0, 0.0, 0.0, 0};
        BathParams b = BathParams::symmetric_bias(6.0, 0.05, 1.0);
        (void)validate(d, b);
        CHECK(d.gamma_l == 0.0);
        CHECK(b.cutoff == 1.0);
    }
}

TEST_CASE("rescaling all energies leaves dimensionless outputs unchanged")
{
    DeviceParams d{0.4, -0.2, 1.3, 0.7, 0.9}; // Gamma = 2
    BathParams b = BathParams::symmetric_bias(6.0, 0.1, 100.0);
    const double factor = 0.5;
    const DeviceParams ds = rescaled(d, factor);
    const BathParams bs = rescaled(b, factor);
    CHECK(ds.gamma() == doctest::Approx(1.0));

    for (double t : {0.5, 2.0}) {
        const auto a = assemble_rho(occupation_v(d, b, t));
        const auto s = assemble_rho(occupation_v(ds, bs, t / factor));
        CHECK(std::abs(a.rho00 - s.rho00) < 1e-12);
        CHECK(std::abs(a.rho11 - s.rho11) < 1e-12);
        CHECK(std::abs(a.rho22 - s.rho22) < 1e-12);
        CHECK(std::abs(a.rho33 - s.rho33) < 1e-12);
        CHECK(std::abs(a.rho21 - s.rho21) < 1e-12);
    }
    for (double w : {-3.0, 0.0, 0.7, 5.0}) {
        CHECK(std::abs(transmission(d, w) - transmission(ds, w * factor)) < 1e-12);
    }
}
