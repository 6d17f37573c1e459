// oracle.hpp — Brute-force check: both reservoirs replaced by N explicit modes,
// the closed (dots + leads) single-particle problem evolved exactly, and the
// dot density matrix rebuilt from the 2x2 dot block of the correlation matrix.
//
// Basis ordering: a_1, a_2, then the N left-lead modes, then the N right-lead modes.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "abdqd/core.hpp"
#include "abdqd/propagator.hpp"
#include "abdqd/state.hpp"

namespace abdqd {

struct DiscretizedLeadModel {
    int n_modes{0};               // per lead
    double half_bandwidth{0.0};   // lead band [-D_lead, D_lead]
    double spacing{0.0};          // 2 D_lead / N
    std::vector<double> mode_energies;
    Eigen::MatrixXcd couplings;   // 2 x 2N, V_{j, alpha k}
    Eigen::MatrixXcd hamiltonian; // single-particle, (2 + 2N) square
    Eigen::VectorXd initial_occupations;

    // One-time diagonalisation of the Hamiltonian.
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;

    int dimension() const { return 2 + 2 * n_modes; }
    double recurrence_time() const;
    // Latest time at which a comparison is still meaningful.
    double comparison_horizon() const { return 0.5 * recurrence_time(); }
    int mode_index(Lead lead, int k) const { return 2 + (lead == Lead::left ? 0 : n_modes) + k; }
};

// C_mn = <a_n^dag a_m>
struct CorrelationMatrix {
    Eigen::MatrixXcd c;
    double time{0.0};

    ComplexMat2 dot_block() const;
    double particle_number() const { return c.trace().real(); }
};

// coupling_scale multiplies every V (0 decouples the dots).
DiscretizedLeadModel build_model(const DeviceParams& device, const BathParams& bath, int n_modes,
                                 double lead_bandwidth, double coupling_scale = 1.0);

CorrelationMatrix initial_correlation(const DiscretizedLeadModel& model);

// C(t) = e^{-iHt} C(0) e^{iHt}
CorrelationMatrix evolve(const DiscretizedLeadModel& model, double t);

// The 2x2 dot block of C(t) alone, O(n^2) per time.
ComplexMat2 evolve_dot_block(const DiscretizedLeadModel& model, double t);

ReducedDensityMatrix reduced_rho(const DiscretizedLeadModel& model, const CorrelationMatrix& c);

// <H> = tr(h C)
double energy(const DiscretizedLeadModel& model, const CorrelationMatrix& c);

struct OracleComparison {
    std::vector<double> times;
    std::vector<double> residuals; // max elementwise |rho_oracle - rho_pipeline| per time
    double max_residual() const;
};

// Throws std::domain_error if any time reaches half the recurrence time.
OracleComparison compare_with_pipeline(const DeviceParams& device, const BathParams& bath,
                                       const QuadratureSpec& quad, int n_modes, double lead_bandwidth,
                                       const std::vector<double>& times,
                                       LinewidthConvention convention = LinewidthConvention::half);

// Largest elementwise difference over (rho00, rho11, rho22, rho33, Re rho21, Im rho21).
double max_elementwise_difference(const ReducedDensityMatrix& a, const ReducedDensityMatrix& b);

} // namespace abdqd
