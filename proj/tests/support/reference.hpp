// reference.hpp — Independent reference computations used only by the tests.
//
// Nothing here calls into the propagator/analytics code paths it is used to check.

#pragma once

#include <random>

#include <Eigen/Dense>

#include "abdqd/core.hpp"
#include "abdqd/state.hpp"

namespace abdqd::reference {

// Scaling-and-squaring Taylor exponential of a dense complex matrix.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

// M built directly from the linewidths.
Eigen::Matrix2cd generator(const DeviceParams& device);

// int_0^t dtau e^{-i omega (t - tau)} exp(-M tau) by the trapezoid rule.
Eigen::Matrix2cd windowed_u_trapezoid(const DeviceParams& device, double t, double omega, int points);

// Tr[Gamma_L W_L G Gamma_R W_R G^dag] with G = (M - i omega)^{-1}, E1 = -E2 = dE/2.
double landauer_transmission(const DeviceParams& device, double omega);

// Full 4x4 Fock-space density matrix of the Gaussian state with correlation v,
// built mode by mode in the eigenbasis of v and rotated back.
Eigen::Matrix4cd fock_density_matrix(const Eigen::Matrix2cd& v);

// Random Hermitian 2x2 with spectrum in [0, 1].
Eigen::Matrix2cd random_occupation(std::mt19937_64& rng);

} // namespace abdqd::reference
