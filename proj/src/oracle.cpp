// oracle.cpp — Discretised-lead model and its exact evolution

#include "abdqd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace abdqd {

namespace {
constexpr Complex I{0.0, 1.0};
}

double DiscretizedLeadModel::recurrence_time() const { return 2.0 * std::numbers::pi / spacing; }

ComplexMat2 CorrelationMatrix::dot_block() const
{
    ComplexMat2 d;
    d << c(0, 0), c(0, 1), c(1, 0), c(1, 1);
    return d;
}

DiscretizedLeadModel build_model(const DeviceParams& device, const BathParams& bath, int n_modes,
                                 double lead_bandwidth, double coupling_scale)
{
    if (n_modes < 2) throw std::invalid_argument("build_model: need at least 2 modes per lead");
    if (!(lead_bandwidth > 0.0)) throw std::invalid_argument("build_model: lead bandwidth must be positive");

    DiscretizedLeadModel model;
    model.n_modes = n_modes;
    model.half_bandwidth = lead_bandwidth;
    model.spacing = 2.0 * lead_bandwidth / n_modes;
    model.mode_energies.resize(n_modes);
    for (int k = 0; k < n_modes; ++k) {
        // cell midpoints of the uniform grid on [-D_lead, D_lead]
        model.mode_energies[k] = -lead_bandwidth + (k + 0.5) * model.spacing;
    }

    // Gamma_alpha = 2 pi |V|^2 / spacing; flux split over the four amplitudes as
    // V_1L^* = V_2L = |V_L| e^{i phi/4},  V_1R = V_2R^* = |V_R| e^{i phi/4}.
    const double vl = coupling_scale * std::sqrt(device.gamma_l * model.spacing / (2.0 * std::numbers::pi));
    const double vr = coupling_scale * std::sqrt(device.gamma_r * model.spacing / (2.0 * std::numbers::pi));
    const Complex q = std::exp(I * (0.25 * device.phi));
    const Complex v1l = vl * std::conj(q);
    const Complex v2l = vl * q;
    const Complex v1r = vr * q;
    const Complex v2r = vr * std::conj(q);

    const int n = model.dimension();
    model.couplings = Eigen::MatrixXcd::Zero(2, 2 * n_modes);
    model.hamiltonian = Eigen::MatrixXcd::Zero(n, n);
    model.initial_occupations = Eigen::VectorXd::Zero(n);
    model.hamiltonian(0, 0) = device.e1;
    model.hamiltonian(1, 1) = device.e2;
    for (int k = 0; k < n_modes; ++k) {
        const double eps = model.mode_energies[k];
        const int il = model.mode_index(Lead::left, k);
        const int ir = model.mode_index(Lead::right, k);
        model.hamiltonian(il, il) = eps;
        model.hamiltonian(ir, ir) = eps;
        model.couplings(0, k) = v1l;
        model.couplings(1, k) = v2l;
        model.couplings(0, n_modes + k) = v1r;
        model.couplings(1, n_modes + k) = v2r;
        model.initial_occupations(il) = bath.occupation(Lead::left, eps);
        model.initial_occupations(ir) = bath.occupation(Lead::right, eps);
    }
    // H_T = sum V_{j alpha} c^dag_{alpha k} a_j + h.c.
    for (int j = 0; j < 2; ++j) {
        for (int m = 0; m < 2 * n_modes; ++m) {
            model.hamiltonian(2 + m, j) = model.couplings(j, m);
            model.hamiltonian(j, 2 + m) = std::conj(model.couplings(j, m));
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(model.hamiltonian);
    if (solver.info() != Eigen::Success) throw std::runtime_error("build_model: eigendecomposition failed");
    model.eigenvalues = solver.eigenvalues();
    model.eigenvectors = solver.eigenvectors();
    return model;
}

CorrelationMatrix initial_correlation(const DiscretizedLeadModel& model)
{
    return CorrelationMatrix{model.initial_occupations.cast<Complex>().asDiagonal(), 0.0};
}

CorrelationMatrix evolve(const DiscretizedLeadModel& model, double t)
{
    if (t < 0.0) throw std::invalid_argument("evolve: t must be non-negative");
    if (t == 0.0) return initial_correlation(model);
    const Eigen::MatrixXcd& q = model.eigenvectors;
    const Eigen::VectorXcd phases = (-I * t * model.eigenvalues.cast<Complex>()).array().exp();
    // U = Q diag(e^{-i w t}) Q^dag, C(t) = U C(0) U^dag with C(0) diagonal
    const Eigen::MatrixXcd u = q * phases.asDiagonal() * q.adjoint();
    const Eigen::MatrixXcd un = u * model.initial_occupations.cast<Complex>().asDiagonal();
    return CorrelationMatrix{un * u.adjoint(), t};
}

ComplexMat2 evolve_dot_block(const DiscretizedLeadModel& model, double t)
{
    if (t < 0.0) throw std::invalid_argument("evolve_dot_block: t must be non-negative");
    const Eigen::MatrixXcd& q = model.eigenvectors;
    const Eigen::VectorXcd phases = (-I * t * model.eigenvalues.cast<Complex>()).array().exp();
    // the two dot rows of U
    const Eigen::MatrixXcd rows = (q.topRows(2) * phases.asDiagonal()) * q.adjoint();
    const Eigen::MatrixXcd weighted = rows * model.initial_occupations.cast<Complex>().asDiagonal();
    const Eigen::Matrix2cd block = weighted * rows.adjoint();
    ComplexMat2 out;
    out << block(0, 0), block(0, 1), block(1, 0), block(1, 1);
    return out;
}

ReducedDensityMatrix reduced_rho(const DiscretizedLeadModel&, const CorrelationMatrix& c)
{
    OccupationMatrix v;
    v.v = c.dot_block();
    v.time = c.time;
    return assemble_rho(v);
}

double energy(const DiscretizedLeadModel& model, const CorrelationMatrix& c)
{
    // sum_mn h_mn <d_m^dag d_n> = sum_mn h_mn C_nm
    return (model.hamiltonian.cwiseProduct(c.c.transpose())).sum().real();
}

double OracleComparison::max_residual() const
{
    return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

double max_elementwise_difference(const ReducedDensityMatrix& a, const ReducedDensityMatrix& b)
{
    const double d[] = {std::abs(a.rho00 - b.rho00), std::abs(a.rho11 - b.rho11),
                        std::abs(a.rho22 - b.rho22), std::abs(a.rho33 - b.rho33),
                        std::abs(a.rho21.real() - b.rho21.real()), std::abs(a.rho21.imag() - b.rho21.imag())};
    return *std::max_element(std::begin(d), std::end(d));
}

OracleComparison compare_with_pipeline(const DeviceParams& device, const BathParams& bath,
                                       const QuadratureSpec& quad, int n_modes, double lead_bandwidth,
                                       const std::vector<double>& times, LinewidthConvention convention)
{
    const DiscretizedLeadModel model = build_model(device, bath, n_modes, lead_bandwidth);
    for (double t : times) {
        if (t >= model.comparison_horizon()) {
            throw std::domain_error(fmt::format(
                "oracle with N = {} modes per lead recurs at t = {:.3f}; t = {} is past the comparison horizon {:.3f}",
                n_modes, model.recurrence_time(), t, model.comparison_horizon()));
        }
    }

    OracleComparison out;
    for (double t : times) {
        OccupationMatrix dots;
        dots.v = evolve_dot_block(model, t);
        dots.time = t;
        const ReducedDensityMatrix oracle = assemble_rho(dots);
        const ReducedDensityMatrix pipeline = assemble_rho(occupation_v(device, bath, t, quad, convention));
        out.times.push_back(t);
        out.residuals.push_back(max_elementwise_difference(oracle, pipeline));
    }
    return out;
}

} // namespace abdqd
