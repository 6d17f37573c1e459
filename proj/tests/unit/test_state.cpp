#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "abdqd/state.hpp"
#include "reference.hpp"

using namespace abdqd;

namespace {

constexpr double pi = std::numbers::pi;
constexpr Complex I{0.0, 1.0};

OccupationMatrix occupation(const Eigen::Matrix2cd& m)
{
    OccupationMatrix v;
    v.v = m;
    return v;
}

ReducedDensityMatrix from_block(double r11, double r22, Complex r21)
{
    ReducedDensityMatrix rho;
    rho.rho11 = r11;
    rho.rho22 = r22;
    rho.rho21 = r21;
    rho.rho00 = 1.0 - r11 - r22;
    rho.rho33 = 0.0;
    return rho;
}

} // namespace

TEST_CASE("assemble_rho examples")
{
    SUBCASE("empty dots")
    {
        const auto rho = assemble_rho(OccupationMatrix{});
        CHECK(rho.rho00 == 1.0);
        CHECK(rho.rho11 == 0.0);
        CHECK(rho.rho22 == 0.0);
        CHECK(rho.rho33 == 0.0);
        CHECK(rho.rho21 == Complex{0.0, 0.0});
    }
    SUBCASE("half filling without coherence")
    {
        Eigen::Matrix2cd v = 0.5 * Eigen::Matrix2cd::Identity();
        const auto rho = assemble_rho(occupation(v));
        for (double x : {rho.rho00, rho.rho11, rho.rho22, rho.rho33}) CHECK(x == doctest::Approx(0.25));
        CHECK(std::abs(rho.rho21) == 0.0);
    }
    SUBCASE("stationary values at the canonical point")
    {
        Eigen::Matrix2cd v;
        v << 0.5, 0.4049 * I, -0.4049 * I, 0.5;
        const auto rho = assemble_rho(occupation(v));
        const double det = 0.25 - 0.4049 * 0.4049;
        CHECK(rho.rho33 == doctest::Approx(det));
        CHECK(rho.rho11 == doctest::Approx(0.5 - det));
        CHECK(rho.rho22 == doctest::Approx(0.5 - det));
        CHECK(std::abs(rho.rho21 - Complex{0.0, -0.4049}) < 1e-15);
        const auto b = bloch_vector(rho);
        CHECK(b.r[0] == doctest::Approx(0.0));
        CHECK(b.r[1] == doctest::Approx(-0.8098));
        CHECK(b.r[2] == doctest::Approx(0.0));
        CHECK(b.leakage == doctest::Approx(rho.rho00 + rho.rho33));
    }
    SUBCASE("unphysical occupation is rejected")
    {
        Eigen::Matrix2cd v;
        v << 1.2, 0.0, 0.0, 0.3;
        CHECK_THROWS_AS(assemble_rho(occupation(v)), InvalidOccupation);
        v << 0.5, 0.6, 0.6, 0.5;
        CHECK_THROWS_AS(assemble_rho(occupation(v)), InvalidOccupation);
    }
}

TEST_CASE("assemble_rho agrees with the Fock-space construction")
{
    std::mt19937_64 rng(42);
    for (int k = 0; k < 500; ++k) {
        const Eigen::Matrix2cd v = reference::random_occupation(rng);
        const Eigen::Matrix4cd full = reference::fock_density_matrix(v);
        const auto rho = assemble_rho(occupation(v));
        CHECK((rho.matrix() - full).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("density-matrix invariants on random occupations")
{
    std::mt19937_64 rng(9);
    for (int k = 0; k < 1000; ++k) {
        const auto rho = assemble_rho(occupation(reference::random_occupation(rng)));
        CHECK(std::abs(rho.trace() - 1.0) < 1e-9);
        CHECK(rho.purity() <= 1.0 + 1e-9);
        CHECK(std::norm(rho.rho21) <= rho.rho11 * rho.rho22 + 1e-10);
        for (double x : {rho.rho00, rho.rho11, rho.rho22, rho.rho33}) {
            CHECK(x >= -1e-10);
            CHECK(x <= 1.0 + 1e-10);
        }
        const auto b = bloch_vector(rho);
        CHECK(b.norm() <= rho.one_electron_weight() + 1e-9);
    }
}

TEST_CASE("Bloch vector")
{
    const auto pure = bloch_vector(from_block(0.5, 0.5, -0.5 * I));
    CHECK(pure.r[0] == doctest::Approx(0.0));
    CHECK(pure.r[1] == doctest::Approx(-1.0));
    CHECK(pure.r[2] == doctest::Approx(0.0));
    CHECK(pure.leakage == doctest::Approx(0.0));
    CHECK(pure.norm() == doctest::Approx(1.0));

    const auto empty = bloch_vector(ReducedDensityMatrix{});
    CHECK(empty.norm() == 0.0);
    CHECK(empty.leakage == 1.0);

    // a localised electron sits on the pole
    const auto pole = bloch_vector(from_block(1.0, 0.0, 0.0));
    CHECK(pole.r[2] == doctest::Approx(1.0));
    CHECK(pole.norm() == doctest::Approx(1.0));

    // the one-electron block is (1/2)(w I + r.sigma) with w = rho11 + rho22
    const auto rho = from_block(0.3, 0.5, Complex{0.1, -0.2});
    const auto b = bloch_vector(rho);
    const ComplexMat2 block = rho.one_electron_block();
    ComplexMat2 rebuilt;
    rebuilt << 0.5 * (rho.one_electron_weight() + b.r[2]), 0.5 * Complex{b.r[0], -b.r[1]},
        0.5 * Complex{b.r[0], b.r[1]}, 0.5 * (rho.one_electron_weight() - b.r[2]);
    CHECK((block - rebuilt).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("coherence phase")
{
    CHECK(coherence_phase(from_block(0.5, 0.5, -0.5 * I)) == doctest::Approx(-pi / 2));
    CHECK(coherence_phase(from_block(0.5, 0.5, Complex{-0.5, 0.0})) == doctest::Approx(pi));
    CHECK(coherence_phase(from_block(0.5, 0.5, Complex{-0.5, -0.0})) == doctest::Approx(pi));
    CHECK_THROWS_AS(coherence_phase(from_block(0.5, 0.5, 0.0)), PhaseUndefined);
    CHECK_THROWS_AS(coherence_phase(from_block(0.5, 0.5, 1e-10)), PhaseUndefined);
    CHECK_NOTHROW(coherence_phase(from_block(0.5, 0.5, 1e-10), 1e-11));
}

TEST_CASE("fidelity to the molecular target")
{
    for (double phi : {-2 * pi, -pi / 2, 0.0, 1.0, 3 * pi}) {
        // |psi> = (|1> + e^{-i phi/2}|2>)/sqrt 2, rho21 = <2|psi><psi|1> = e^{-i phi/2}/2
        const auto target = from_block(0.5, 0.5, 0.5 * std::exp(-I * (0.5 * phi)));
        CHECK(fidelity_to_target(target, phi) == doctest::Approx(1.0));
        CHECK(fidelity_to_target(target, phi + 2 * pi) == doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK(fidelity_to_target(ReducedDensityMatrix{}, 0.7) == 0.0);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-4 * pi, 4 * pi);
    for (int k = 0; k < 200; ++k) {
        const auto rho = assemble_rho(occupation(reference::random_occupation(rng)));
        const double f = fidelity_to_target(rho, u(rng));
        CHECK(f >= -1e-12);
        CHECK(f <= rho.one_electron_weight() + 1e-12);
    }
}

TEST_CASE("canonical time trace")
{
    const DeviceParams d{0.0, 0.0, 0.95, 0.05, -pi / 2};
    const BathParams b = BathParams::symmetric_bias(6.0, 0.05);

    SUBCASE("frozen fidelity at t = 3")
    {
        const auto rho = density_matrix_at(d, b, 3.0);
        CHECK(fidelity_to_target(rho, d.phi) == doctest::Approx(0.8646240279).epsilon(1e-8));
    }
    SUBCASE("trace preserved along the trajectory")
    {
        for (int k = 0; k <= 30; ++k) {
            const auto rho = density_matrix_at(d, b, 0.2 * k);
            CHECK(std::abs(rho.trace() - 1.0) < 1e-9);
            CHECK(rho.purity() <= 1.0 + 1e-9);
        }
    }
    SUBCASE("phase follows -phi/2 at large bias and strong asymmetry")
    {
        const BathParams wide = BathParams::symmetric_bias(200.0, 0.0, 400.0);
        for (double phi : {0.5, pi / 2, pi, 4.0, 5.5}) {
            const DeviceParams s = DeviceParams::degenerate(1.0, 0.999, phi);
            const auto rho = assemble_rho(steady_v(s, wide));
            CHECK(std::abs(coherence_phase(rho) + phi / 2) < 0.05);
        }
    }
}
