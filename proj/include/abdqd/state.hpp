// state.hpp — Reduced density matrix of the dots in the basis
// |0> empty, |1> dot 1, |2> dot 2, |3> both occupied.

#pragma once

#include <array>
#include <stdexcept>

#include "abdqd/core.hpp"
#include "abdqd/propagator.hpp"

namespace abdqd {

class InvalidOccupation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class PhaseUndefined : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Only rho_00..rho_33 and rho_21 can be non-zero; rho_12 = conj(rho_21).
struct ReducedDensityMatrix {
    double rho00{1.0};
    double rho11{0.0};
    double rho22{0.0};
    double rho33{0.0};
    Complex rho21{0.0, 0.0};

    Complex rho12() const { return std::conj(rho21); }
    double trace() const { return rho00 + rho11 + rho22 + rho33; }
    double purity() const;
    double one_electron_weight() const { return rho11 + rho22; }
    Eigen::Matrix4cd matrix() const;
    ComplexMat2 one_electron_block() const;
};

struct BlochState {
    std::array<double, 3> r{0.0, 0.0, 0.0};
    double leakage{1.0}; // rho00 + rho33

    double norm() const;
};

inline constexpr double default_phase_floor = 1e-9;
inline constexpr double default_occupation_tolerance = 1e-8;

// rho11 = v11 - det v, rho22 = v22 - det v, rho21 = v21,
// rho00 = det(I - v), rho33 = det v.
ReducedDensityMatrix assemble_rho(const OccupationMatrix& v,
                                  double tolerance = default_occupation_tolerance);

BlochState bloch_vector(const ReducedDensityMatrix& rho);

// arg(rho_21) in (-pi, pi].
double coherence_phase(const ReducedDensityMatrix& rho, double phase_floor = default_phase_floor);

// <psi(phi)| rho |psi(phi)> with psi = (|1> + e^{-i phi/2} |2>)/sqrt(2); the
// one-electron block is not renormalised, so leakage lowers the value.
double fidelity_to_target(const ReducedDensityMatrix& rho, double phi);

// Convenience: assemble_rho(occupation_v(...)).
ReducedDensityMatrix density_matrix_at(const DeviceParams& device, const BathParams& bath, double t,
                                       const QuadratureSpec& quad = {});

} // namespace abdqd
