// propagator.hpp — Retarded propagator u(tau), its windowed transform and the
// occupation matrix v(t) of the dots.
//
// Conventions used throughout:
//   M      = i diag(E1, E2) + 1/2 [[Gamma, Gamma_c], [Gamma_c^*, Gamma]]
//   Gamma_c = Gamma cos(phi/2) + i dGamma sin(phi/2)
//   u(tau) = exp(-M tau)
//   W_L    = [[1, e^{+i phi/2}], [e^{-i phi/2}, 1]],  W_R = W_L(-phi)
//   v_ij   = <a_j^dag a_i>, so v(1,0) is the inter-dot coherence rho_21.
// A lead electron of energy omega enters with phase e^{-i omega t}; the
// windowed transform is u(t, omega) = int_0^t dtau e^{-i omega (t - tau)} u(tau).

#pragma once

#include <array>
#include <limits>
#include <stdexcept>
#include <vector>

#include "abdqd/core.hpp"
#include "abdqd/quadrature.hpp"

namespace abdqd {

// `printed_full` puts the full linewidth on the diagonal of M. It exists only to
// demonstrate that the closed forms reject it (see `abdqd verify`).
enum class LinewidthConvention { half, printed_full };

struct DecayMatrix {
    ComplexMat2 m;
};

DecayMatrix decay_matrix(const DeviceParams& device,
                         LinewidthConvention convention = LinewidthConvention::half);

// Gamma_c(phi)
Complex interference_linewidth(const DeviceParams& device);

// W_alpha, the flux-dressed coupling pattern of lead alpha.
ComplexMat2 lead_coupling_matrix(double phi, Lead lead);

// exp(a) for a 2x2 matrix, from a = c0 I + K with K^2 = q I.
ComplexMat2 expm2(const ComplexMat2& a);

// a^{-1} (I - exp(-a t)) = int_0^t exp(-a s) ds, finite for singular a.
ComplexMat2 integrated_exponential(const ComplexMat2& a, double t);

ComplexMat2 retarded_u(const DeviceParams& device, double tau,
                       LinewidthConvention convention = LinewidthConvention::half);

ComplexMat2 windowed_u(const DeviceParams& device, double t, double omega,
                       LinewidthConvention convention = LinewidthConvention::half);

// G(omega) = (M - i omega)^{-1}; e^{-i omega t} G is the t -> infinity limit of windowed_u.
ComplexMat2 steady_green(const DecayMatrix& decay, double omega);

// Energies at which G has its poles (imaginary parts of the eigenvalues of M).
std::vector<double> resonance_energies(const DecayMatrix& decay);

struct OccupationMatrix {
    ComplexMat2 v{ComplexMat2::Zero()};
    double time{0.0}; // +infinity for the steady state

    bool is_steady() const { return time == std::numeric_limits<double>::infinity(); }
    Complex coherence() const { return v(1, 0); }
    // Eigenvalues of the Hermitian part, ascending.
    std::array<double, 2> eigenvalues() const;
    double hermiticity_defect() const { return (v - v.adjoint()).cwiseAbs().maxCoeff(); }
};

OccupationMatrix occupation_v(const DeviceParams& device, const BathParams& bath, double t,
                              const QuadratureSpec& quad = {},
                              LinewidthConvention convention = LinewidthConvention::half);

// Stationary v. At flux/asymmetry points where one normal mode of the dots
// decouples from both leads (dE = 0 and Gamma_- = 0) the mode is assigned the
// occupation it has in the limit of a vanishing decay rate, which keeps the
// steady state continuous in phi.
OccupationMatrix steady_v(const DeviceParams& device, const BathParams& bath,
                          const QuadratureSpec& quad = {},
                          LinewidthConvention convention = LinewidthConvention::half);

// Slowest decay rate Gamma_-(phi) = min Re eig(M) (half convention).
double slowest_decay_rate(const DeviceParams& device);

// True when a normal mode of the dots is decoupled from both leads.
bool has_dark_mode(const DeviceParams& device);

// E1(z) for Re z >= 0, used by the tail estimate of v(t).
Complex exponential_integral_e1(Complex z);

} // namespace abdqd
