// analytics.hpp — Closed-form steady-state coherence, transmission and current

#pragma once

#include <stdexcept>

#include "abdqd/core.hpp"
#include "abdqd/quadrature.hpp"

namespace abdqd {

class NotDegenerate : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class UnitarityViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// gamma(phi)^2 = Gamma^2 cos^2(phi/2) + dGamma^2 sin^2(phi/2) - dE^2 and
// Gamma_+- = (Gamma +- gamma)/2, principal square root.
struct SpectralScales {
    Complex gamma_phi;
    Complex gamma_plus;
    Complex gamma_minus;
    double gamma_phi_squared;
};

SpectralScales spectral_scales(const DeviceParams& device);

// Steady rho_21 at zero temperature under symmetric bias mu_L = eV/2 = -mu_R,
// levels placed symmetrically (E1 + E2 = 0). A vanishing Gamma_- is taken in
// the limit atan(eV/0+) = pi/2.
Complex steady_rho21_closed(const DeviceParams& device, double bias);

// eV >> Gamma limit at dE = 0; the phi = 0 (mod 4 pi) branch is reported as is.
Complex large_bias_rho21(const DeviceParams& device);

// T(omega, phi) for the symmetric level placement E1 = -E2 = dE/2.
double transmission(const DeviceParams& device, double omega);

// I = int domega/2pi [f_L - f_R] T(omega, phi); positive for flow L -> R.
double steady_current(const DeviceParams& device, const BathParams& bath, const QuadratureSpec& quad = {});

// (Gamma^2 - dGamma^2) cos^2(phi/2) / (2 Gamma): the dE = 0 current at infinite bias.
double saturated_current(const DeviceParams& device);

} // namespace abdqd
