#include "reference.hpp"

#include <cmath>
#include <numbers>

namespace abdqd::reference {

namespace {
constexpr Complex I{0.0, 1.0};
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a)
{
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const Eigen::MatrixXcd x = a / std::pow(2.0, squarings);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
    Eigen::MatrixXcd sum = term;
    for (int k = 1; k <= 30; ++k) {
        term = term * x / static_cast<double>(k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

Eigen::Matrix2cd generator(const DeviceParams& d)
{
    // Lead alpha contributes Gamma_alpha/2 times V_{i alpha}^* V_{j alpha} / |V_alpha|^2.
    const Complex q = std::exp(I * (0.25 * d.phi));
    const Eigen::Vector2cd left(std::conj(q), q);  // V_1L, V_2L
    const Eigen::Vector2cd right(q, std::conj(q)); // V_1R, V_2R
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = I * d.e1;
    m(1, 1) = I * d.e2;
    m += 0.5 * d.gamma_l * left.conjugate() * left.transpose();
    m += 0.5 * d.gamma_r * right.conjugate() * right.transpose();
    return m;
}

Eigen::Matrix2cd windowed_u_trapezoid(const DeviceParams& device, double t, double omega, int points)
{
    const Eigen::Matrix2cd m = generator(device);
    const double h = t / points;
    Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
    for (int i = 0; i <= points; ++i) {
        const double tau = i * h;
        const double w = (i == 0 || i == points) ? 0.5 : 1.0;
        sum += w * std::exp(-I * (omega * (t - tau))) * expm(-m * tau);
    }
    return h * sum;
}

double landauer_transmission(const DeviceParams& device, double omega)
{
    DeviceParams d = device;
    d.e1 = 0.5 * device.delta_e();
    d.e2 = -0.5 * device.delta_e();
    const Eigen::Matrix2cd m = generator(d);
    const Eigen::Matrix2cd g = (m - I * omega * Eigen::Matrix2cd::Identity()).inverse();
    const Complex q = std::exp(I * (0.25 * d.phi));
    const Eigen::Vector2cd left(std::conj(q), q);
    const Eigen::Vector2cd right(q, std::conj(q));
    const Eigen::Matrix2cd bl = d.gamma_l * left.conjugate() * left.transpose();
    const Eigen::Matrix2cd br = d.gamma_r * right.conjugate() * right.transpose();
    return (bl * g * br * g.adjoint()).trace().real();
}

Eigen::Matrix4cd fock_density_matrix(const Eigen::Matrix2cd& v)
{
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(0.5 * (v + v.adjoint()));
    const Eigen::Vector2d n = solver.eigenvalues();
    const Eigen::Matrix2cd u = solver.eigenvectors();
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    rho(0, 0) = (1.0 - n(0)) * (1.0 - n(1));
    rho(3, 3) = n(0) * n(1);
    for (int k = 0; k < 2; ++k) {
        const double weight = n(k) * (1.0 - n(1 - k));
        rho.block<2, 2>(1, 1) += weight * u.col(k) * u.col(k).adjoint();
    }
    return rho;
}

Eigen::Matrix2cd random_occupation(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    const double theta = 0.5 * std::numbers::pi * unit(rng);
    const double chi = angle(rng);
    Eigen::Matrix2cd u;
    u << std::cos(theta), -std::sin(theta) * std::exp(-I * chi), std::sin(theta) * std::exp(I * chi),
        std::cos(theta);
    const Eigen::Vector2cd n(unit(rng), unit(rng));
    return u * n.asDiagonal() * u.adjoint();
}

} // namespace abdqd::reference
