// state.cpp — Density-matrix assembly and its derived observables

#include "abdqd/state.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace abdqd {

double ReducedDensityMatrix::purity() const
{
    return rho00 * rho00 + rho11 * rho11 + rho22 * rho22 + rho33 * rho33 + 2.0 * std::norm(rho21);
}

Eigen::Matrix4cd ReducedDensityMatrix::matrix() const
{
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = rho00;
    m(1, 1) = rho11;
    m(2, 2) = rho22;
    m(3, 3) = rho33;
    m(2, 1) = rho21;
    m(1, 2) = rho12();
    return m;
}

ComplexMat2 ReducedDensityMatrix::one_electron_block() const
{
    ComplexMat2 m;
    m << rho11, rho12(), rho21, rho22;
    return m;
}

double BlochState::norm() const { return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]); }

ReducedDensityMatrix assemble_rho(const OccupationMatrix& occupation, double tolerance)
{
    const auto eig = occupation.eigenvalues();
    if (!(eig[0] >= -tolerance && eig[1] <= 1.0 + tolerance)) {
        throw InvalidOccupation(
            fmt::format("occupation matrix eigenvalues ({}, {}) outside [0, 1]", eig[0], eig[1]));
    }
    const ComplexMat2& v = occupation.v;
    const double v11 = v(0, 0).real();
    const double v22 = v(1, 1).real();
    const double det = v11 * v22 - std::norm(0.5 * (v(1, 0) + std::conj(v(0, 1))));

    ReducedDensityMatrix rho;
    rho.rho11 = v11 - det;
    rho.rho22 = v22 - det;
    rho.rho33 = det;
    rho.rho00 = 1.0 - v11 - v22 + det; // det(I - v)
    rho.rho21 = v(1, 0);
    return rho;
}

BlochState bloch_vector(const ReducedDensityMatrix& rho)
{
    BlochState b;
    b.r = {2.0 * rho.rho21.real(), 2.0 * rho.rho21.imag(), rho.rho11 - rho.rho22};
    b.leakage = rho.rho00 + rho.rho33;
    return b;
}

double coherence_phase(const ReducedDensityMatrix& rho, double phase_floor)
{
    if (std::abs(rho.rho21) <= phase_floor) {
        throw PhaseUndefined(fmt::format("|rho_21| = {} is below the phase floor {}", std::abs(rho.rho21),
                                         phase_floor));
    }
    const double phase = std::arg(rho.rho21);
    // std::arg returns [-pi, pi]; fold -pi onto pi
    return phase == -std::numbers::pi ? std::numbers::pi : phase;
}

double fidelity_to_target(const ReducedDensityMatrix& rho, double phi)
{
    const Complex rotated = rho.rho21 * std::exp(Complex{0.0, 0.5 * phi});
    return 0.5 * (rho.rho11 + rho.rho22) + rotated.real();
}

ReducedDensityMatrix density_matrix_at(const DeviceParams& device, const BathParams& bath, double t,
                                       const QuadratureSpec& quad)
{
    return assemble_rho(occupation_v(device, bath, t, quad));
}

} // namespace abdqd
