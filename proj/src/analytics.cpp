// analytics.cpp — Closed forms for the stationary coherence and transport

#include "abdqd/analytics.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "abdqd/propagator.hpp"

namespace abdqd {

namespace {

constexpr double pi = std::numbers::pi;

double cos2_half(double phi) { return 0.5 * (1.0 + std::cos(phi)); }
double sin2_half(double phi) { return 0.5 * (1.0 - std::cos(phi)); }

// Gamma^2 - gamma^2 = (Gamma^2 - dGamma^2) sin^2(phi/2) + dE^2 >= 0
double gap_squared(const DeviceParams& d)
{
    const double g = d.gamma();
    const double dg = d.delta_gamma();
    return (g * g - dg * dg) * sin2_half(d.phi) + d.delta_e() * d.delta_e();
}

// atan(a / x) with the x -> 0+ limit pi/2 sign(a)
Complex atan_ratio(double a, Complex x)
{
    if (x == Complex{0.0, 0.0}) return (a > 0.0 ? 0.5 * pi : (a < 0.0 ? -0.5 * pi : 0.0));
    return std::atan(Complex{a, 0.0} / x);
}

} // namespace

SpectralScales spectral_scales(const DeviceParams& device)
{
    const double g = device.gamma();
    const double gap2 = gap_squared(device);
    SpectralScales s;
    s.gamma_phi_squared = g * g - gap2;
    s.gamma_phi = std::sqrt(Complex{s.gamma_phi_squared, 0.0});
    s.gamma_plus = 0.5 * (g + s.gamma_phi);
    // (Gamma - gamma)/2 = gap^2 / (2 (Gamma + gamma)), no cancellation near gamma = Gamma
    s.gamma_minus = gap2 / (2.0 * (g + s.gamma_phi));
    return s;
}

Complex steady_rho21_closed(const DeviceParams& device, double bias)
{
    const double g = device.gamma();
    if (std::abs(device.e1 + device.e2) > 1e-12 * g) {
        throw std::domain_error("steady_rho21_closed: requires levels placed symmetrically, E1 + E2 = 0");
    }
    if (bias == 0.0) return {0.0, 0.0};

    const double dg = device.delta_gamma();
    const double de = device.delta_e();
    const double half = 0.5 * device.phi;
    const double c = std::cos(half);
    const double s = std::sin(half);
    const SpectralScales sc = spectral_scales(device);

    const double a = 0.5 * bias;
    const Complex atan_plus = atan_ratio(a, sc.gamma_plus);
    const Complex atan_minus = atan_ratio(a, sc.gamma_minus);

    Complex rho21 = (atan_plus + atan_minus) / (2.0 * pi) * Complex{dg / g * c, -s};
    if (de == 0.0) return rho21;

    // (atan_plus/Gamma_+ - atan_minus/Gamma_-) / gamma, with its gamma -> 0 limit h'(Gamma/2)
    Complex weighted;
    if (std::abs(sc.gamma_phi) < 1e-5 * g) {
        const double x = 0.5 * g;
        weighted = -a / (x * (x * x + a * a)) - std::atan(a / x) / (x * x);
    } else {
        weighted = (atan_plus / sc.gamma_plus - atan_minus / sc.gamma_minus) / sc.gamma_phi;
    }
    const Complex phase_factor{-((g * g - dg * dg) * s - dg * de * c) / g, -de * s};
    rho21 += de / (4.0 * pi) * weighted * phase_factor;
    return rho21;
}

Complex large_bias_rho21(const DeviceParams& device)
{
    const double g = device.gamma();
    if (std::abs(device.delta_e()) > 1e-12 * g) {
        throw NotDegenerate(fmt::format("large_bias_rho21: requires dE = 0 (got {})", device.delta_e()));
    }
    const double ratio = device.delta_gamma() / g;
    if (std::abs(std::remainder(device.phi, 4.0 * pi)) <= 1e-12) {
        return {0.25 * (1.0 + ratio), 0.0};
    }
    const double half = 0.5 * device.phi;
    return 0.5 * Complex{ratio * std::cos(half), -std::sin(half)};
}

double transmission(const DeviceParams& device, double omega)
{
    const double g = device.gamma();
    const double dg = device.delta_gamma();
    const double de = device.delta_e();
    const double c2 = cos2_half(device.phi);
    const double s2 = sin2_half(device.phi);
    const double w2 = omega * omega;
    const double strength = g * g - dg * dg;

    double value;
    if (has_dark_mode(device)) {
        // Gamma_- = 0: the omega^2 of the numerator cancels against omega^2 + Gamma_-^2
        value = strength * c2 / (w2 + g * g);
    } else {
        const double gap2 = gap_squared(device);
        // (w^2 + G+^2)(w^2 + G-^2) with G+ + G- = Gamma and G+ G- = gap^2/4
        const double den = w2 * w2 + w2 * (g * g - 0.5 * gap2) + gap2 * gap2 / 16.0;
        value = strength * (w2 * c2 + 0.25 * de * de * s2) / den;
    }
    if (!(value >= -1e-12 && value <= 1.0 + 1e-12)) {
        throw UnitarityViolation(fmt::format("transmission {} outside [0, 1] at omega = {}, phi = {}, "
                                             "gamma_l = {}, gamma_r = {}, dE = {}",
                                             value, omega, device.phi, device.gamma_l, device.gamma_r, de));
    }
    return value;
}

double steady_current(const DeviceParams& device, const BathParams& bath, const QuadratureSpec& quad)
{
    if (bath.mu_l == bath.mu_r) return 0.0;

    DeviceParams centred = device;
    centred.e1 = 0.5 * device.delta_e();
    centred.e2 = -0.5 * device.delta_e();
    std::vector<double> seeds = resonance_energies(decay_matrix(centred));
    seeds.push_back(0.0);
    seeds.push_back(bath.mu_l);
    seeds.push_back(bath.mu_r);

    auto integrand = [&](double omega) {
        const double window = bath.occupation(Lead::left, omega) - bath.occupation(Lead::right, omega);
        if (window == 0.0) return 0.0;
        return window * transmission(device, omega) / (2.0 * pi);
    };

    std::vector<Segment> segments;
    if (bath.temperature == 0.0) {
        const double lo = std::min(bath.mu_l, bath.mu_r);
        const double hi = std::max(bath.mu_l, bath.mu_r);
        std::vector<double> points{lo};
        for (double p : seeds) {
            if (p > lo && p < hi) points.push_back(p);
        }
        points.push_back(hi);
        std::sort(points.begin(), points.end());
        for (std::size_t i = 0; i + 1 < points.size(); ++i) segments.push_back({points[i], points[i + 1]});
    } else {
        segments = window_segments(bath.cutoff, seeds, quad.tail_correction);
    }
    return integrate_segments<double>(integrand, segments, quad).value;
}

double saturated_current(const DeviceParams& device)
{
    const double g = device.gamma();
    const double dg = device.delta_gamma();
    return (g * g - dg * dg) * cos2_half(device.phi) / (2.0 * g);
}

} // namespace abdqd
