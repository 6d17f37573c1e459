// core.hpp — Device/bath parameters, validation and unit conventions
//
// Units: hbar = e = k_B = 1. All energies share one unit (the total linewidth
// Gamma in the defaults), times are measured in its inverse.

#pragma once

#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace abdqd {

using Complex = std::complex<double>;

// Carrier for every 2x2 object (u, v, W_alpha, M). Row-major like the math.
using ComplexMat2 = Eigen::Matrix<Complex, 2, 2, Eigen::RowMajor>;

enum class Lead { left, right };

// Two single-level dots in an Aharonov-Bohm ring.
struct DeviceParams {
    double e1{0.0};       // level of dot 1
    double e2{0.0};       // level of dot 2
    double gamma_l{0.95}; // linewidth from the source lead
    double gamma_r{0.05}; // linewidth from the drain lead
    double phi{0.0};      // AB phase 2*pi*Phi/Phi_0

    double gamma() const { return gamma_l + gamma_r; }
    double delta_gamma() const { return gamma_l - gamma_r; }
    double delta_e() const { return e1 - e2; }
    double linewidth(Lead lead) const { return lead == Lead::left ? gamma_l : gamma_r; }

    // Degenerate levels at zero energy with a given asymmetry.
    static DeviceParams degenerate(double gamma, double delta_gamma, double phi);
};

// Reservoir state and the half-width of the frequency window.
struct BathParams {
    double mu_l{3.0};
    double mu_r{-3.0};
    double temperature{0.05};
    double cutoff{50.0};

    double bias() const { return mu_l - mu_r; }
    double chemical_potential(Lead lead) const { return lead == Lead::left ? mu_l : mu_r; }
    double occupation(Lead lead, double omega) const;

    // mu_L = eV/2 = -mu_R
    static BathParams symmetric_bias(double bias, double temperature, double cutoff = 50.0);
};

// Fermi function; at temperature == 0 a step that takes the value 1/2 at omega == mu.
double fermi(double omega, double mu, double temperature);

// phi = 2*pi*Phi/Phi_0
inline double phase_from_flux(double flux, double flux_quantum = 1.0)
{
    return 2.0 * std::numbers::pi * flux / flux_quantum;
}

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

ValidationReport validate(const DeviceParams& device, const BathParams& bath);

// Rescale every energy by `factor` (times then scale by 1/factor).
DeviceParams rescaled(const DeviceParams& device, double factor);
BathParams rescaled(const BathParams& bath, double factor);

} // namespace abdqd
