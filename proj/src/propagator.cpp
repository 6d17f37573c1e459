// propagator.cpp — u(tau), u(t, omega) and the frequency quadrature for v(t)

#include "abdqd/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace abdqd {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr Complex I{0.0, 1.0};

// cos^2(phi/2) and sin^2(phi/2) through cos(phi): exactly 2pi-periodic inputs.
double cos2_half(double phi) { return 0.5 * (1.0 + std::cos(phi)); }
double sin2_half(double phi) { return 0.5 * (1.0 - std::cos(phi)); }

struct TracelessSplit {
    Complex c0; // a = c0 I + K
    ComplexMat2 k;
    Complex s; // K^2 = s^2 I
};

TracelessSplit split(const ComplexMat2& a)
{
    TracelessSplit out;
    out.c0 = 0.5 * (a(0, 0) + a(1, 1));
    out.k = a - out.c0 * ComplexMat2::Identity();
    out.s = std::sqrt(out.k(0, 0) * out.k(0, 0) + out.k(0, 1) * out.k(1, 0));
    return out;
}

// The mode of the dots decoupled from both leads, and its partner.
struct DarkModes {
    Eigen::Vector2cd dark;
    Eigen::Vector2cd bright;
};

DarkModes dark_modes(const DeviceParams& device)
{
    const double theta = std::arg(interference_linewidth(device));
    const double r = 1.0 / std::sqrt(2.0);
    DarkModes modes;
    modes.dark << r, -r * std::exp(-I * theta);
    modes.bright << r, r * std::exp(-I * theta);
    return modes;
}

ComplexMat2 outer(const Eigen::Vector2cd& x)
{
    ComplexMat2 m = x * x.adjoint();
    return m;
}

std::vector<double> seed_points(const DecayMatrix& decay, const BathParams& bath)
{
    std::vector<double> seeds{bath.mu_l, bath.mu_r, 0.0, 0.5 * bath.bias(), -0.5 * bath.bias()};
    for (double e : resonance_energies(decay)) seeds.push_back(e);
    return seeds;
}

ComplexMat2 coupling_source(const DeviceParams& device, const BathParams& bath, double omega)
{
    return device.gamma_l * bath.occupation(Lead::left, omega) * lead_coupling_matrix(device.phi, Lead::left) +
           device.gamma_r * bath.occupation(Lead::right, omega) * lead_coupling_matrix(device.phi, Lead::right);
}

} // namespace

Complex interference_linewidth(const DeviceParams& device)
{
    return Complex{device.gamma() * std::cos(0.5 * device.phi), device.delta_gamma() * std::sin(0.5 * device.phi)};
}

DecayMatrix decay_matrix(const DeviceParams& device, LinewidthConvention convention)
{
    const double scale = convention == LinewidthConvention::half ? 0.5 : 1.0;
    const double gamma = device.gamma();
    const Complex gc = interference_linewidth(device);
    DecayMatrix d;
    d.m << I * device.e1 + scale * gamma, scale * gc,
           scale * std::conj(gc), I * device.e2 + scale * gamma;
    return d;
}

ComplexMat2 lead_coupling_matrix(double phi, Lead lead)
{
    const double sign = lead == Lead::left ? 1.0 : -1.0;
    const Complex p = std::exp(I * (sign * 0.5 * phi));
    ComplexMat2 w;
    w << 1.0, p, std::conj(p), 1.0;
    return w;
}

ComplexMat2 expm2(const ComplexMat2& a)
{
    const auto [c0, k, s] = split(a);
    Complex cosh_part;
    Complex sinhc_part; // sinh(s)/s
    if (std::abs(s) < 1e-4) {
        const Complex q = s * s;
        const Complex e = std::exp(c0);
        cosh_part = e * (1.0 + q / 2.0 + q * q / 24.0);
        sinhc_part = e * (1.0 + q / 6.0 + q * q / 120.0);
    } else {
        // e^{c0 +- s} separately so large decaying exponents never overflow
        const Complex ep = std::exp(c0 + s);
        const Complex em = std::exp(c0 - s);
        cosh_part = 0.5 * (ep + em);
        sinhc_part = 0.5 * (ep - em) / s;
    }
    return cosh_part * ComplexMat2::Identity() + sinhc_part * k;
}

ComplexMat2 integrated_exponential(const ComplexMat2& a, double t)
{
    if (t == 0.0) return ComplexMat2::Zero();
    const double size = a.cwiseAbs().rowwise().sum().maxCoeff() * t;
    if (size < 1e-3) {
        // t * sum_k (-a t)^k / (k+1)!
        ComplexMat2 term = ComplexMat2::Identity();
        ComplexMat2 sum = ComplexMat2::Identity();
        const ComplexMat2 x = -a * t;
        for (int k = 1; k <= 8; ++k) {
            term = term * x / static_cast<double>(k + 1);
            sum += term;
        }
        return t * sum;
    }
    const ComplexMat2 rhs = ComplexMat2::Identity() - expm2(-a * t);
    return a.inverse() * rhs;
}

ComplexMat2 retarded_u(const DeviceParams& device, double tau, LinewidthConvention convention)
{
    if (tau < 0.0) throw std::invalid_argument("retarded_u: tau must be non-negative");
    return expm2(-decay_matrix(device, convention).m * tau);
}

ComplexMat2 windowed_u(const DeviceParams& device, double t, double omega, LinewidthConvention convention)
{
    if (t < 0.0) throw std::invalid_argument("windowed_u: t must be non-negative");
    const ComplexMat2 a = decay_matrix(device, convention).m - I * omega * ComplexMat2::Identity();
    return std::exp(-I * (omega * t)) * integrated_exponential(a, t);
}

ComplexMat2 steady_green(const DecayMatrix& decay, double omega)
{
    const ComplexMat2 a = decay.m - I * omega * ComplexMat2::Identity();
    return a.inverse();
}

std::vector<double> resonance_energies(const DecayMatrix& decay)
{
    const auto [c0, k, s] = split(decay.m);
    std::vector<double> e{(c0 + s).imag(), (c0 - s).imag()};
    if (std::abs(e[0] - e[1]) < 1e-14) e.pop_back();
    return e;
}

std::array<double, 2> OccupationMatrix::eigenvalues() const
{
    const double a = v(0, 0).real();
    const double d = v(1, 1).real();
    const Complex b = 0.5 * (v(1, 0) + std::conj(v(0, 1)));
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(b));
    return {mean - radius, mean + radius};
}

double slowest_decay_rate(const DeviceParams& device)
{
    const auto [c0, k, s] = split(decay_matrix(device).m);
    return std::min((c0 + s).real(), (c0 - s).real());
}

bool has_dark_mode(const DeviceParams& device)
{
    const double gamma = device.gamma();
    if (std::abs(device.delta_e()) > 1e-12 * gamma) return false;
    const double dg = device.delta_gamma();
    const double gamma_phi = std::sqrt(gamma * gamma * cos2_half(device.phi) + dg * dg * sin2_half(device.phi));
    // Gamma_- = (Gamma^2 - gamma^2) / (2 (Gamma + gamma)), written without cancellation
    const double gamma_minus = (gamma * gamma - dg * dg) * sin2_half(device.phi) / (2.0 * (gamma + gamma_phi));
    return gamma_minus <= 1e-12 * gamma;
}

Complex exponential_integral_e1(Complex z)
{
    if (z == Complex{0.0, 0.0}) return {std::numeric_limits<double>::infinity(), 0.0};
    constexpr double euler_gamma = 0.57721566490153286061;
    if (std::abs(z) <= 2.0) {
        // -gamma - log z - sum_k (-z)^k / (k k!)
        Complex sum{0.0, 0.0};
        Complex term{1.0, 0.0};
        for (int k = 1; k < 200; ++k) {
            term *= -z / static_cast<double>(k);
            const Complex add = term / static_cast<double>(k);
            sum += add;
            if (std::abs(add) < 1e-17 * std::abs(sum)) break;
        }
        return -euler_gamma - std::log(z) - sum;
    }
    // continued fraction, modified Lentz
    constexpr double tiny = 1e-300;
    Complex b = z + 1.0;
    Complex c = 1.0 / tiny;
    Complex d = 1.0 / b;
    Complex h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const Complex del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-z);
}

OccupationMatrix occupation_v(const DeviceParams& device, const BathParams& bath, double t,
                              const QuadratureSpec& quad, LinewidthConvention convention)
{
    if (t < 0.0) throw std::invalid_argument("occupation_v: t must be non-negative");
    if (t == std::numeric_limits<double>::infinity()) return steady_v(device, bath, quad, convention);

    OccupationMatrix out;
    out.time = t;
    if (t == 0.0) return out;

    const DecayMatrix decay = decay_matrix(device, convention);
    const ComplexMat2 decay_t = expm2(-decay.m * t);
    const double cutoff = bath.cutoff;

    auto integrand = [&](double omega) -> ComplexMat2 {
        const ComplexMat2 source = coupling_source(device, bath, omega);
        if (std::abs(omega) < cutoff) {
            const ComplexMat2 u = windowed_u(device, t, omega, convention);
            return u * source * u.adjoint() / two_pi;
        }
        // Tail: the non-oscillating part of u S u^dag; the oscillating cross
        // terms are added in closed form below.
        const ComplexMat2 g = steady_green(decay, omega);
        const ComplexMat2 ge = g * decay_t;
        return (g * source * g.adjoint() + ge * source * ge.adjoint()) / two_pi;
    };

    // e^{i omega t} factors: start from panels of at most half a period
    const auto segments =
        limit_width(window_segments(cutoff, seed_points(decay, bath), quad.tail_correction), std::numbers::pi / t);
    out.v = integrate_segments<ComplexMat2>(integrand, segments, quad).value;

    if (quad.tail_correction) {
        // Cross terms -e^{-i w t} G X G^dag - h.c. with G = i/w + M/w^2 + ..., so
        // G X G^dag = X/w^2 + i (X M^dag - M X)/w^3. With
        //   J_n = int_D^inf e^{-i x t}/x^n dx = E_n(i D t)/D^{n-1},
        // the lower tail picks up conj(J_2) and -conj(J_3).
        const Complex z = I * (cutoff * t);
        const Complex e1 = exponential_integral_e1(z);
        const Complex e2 = std::exp(-z) - z * e1;
        const Complex e3 = 0.5 * (std::exp(-z) - z * e2);
        const Complex j2 = e2 / cutoff;
        const Complex j3 = e3 / (cutoff * cutoff);
        const ComplexMat2& m = decay.m;
        auto third = [&](const ComplexMat2& x) -> ComplexMat2 { return I * (x * m.adjoint() - m * x); };

        const ComplexMat2 s_low = coupling_source(device, bath, -cutoff);
        const ComplexMat2 s_up = coupling_source(device, bath, cutoff);
        const ComplexMat2 x_low = s_low * decay_t.adjoint();
        const ComplexMat2 y_low = decay_t * s_low;
        const ComplexMat2 x_up = s_up * decay_t.adjoint();
        const ComplexMat2 y_up = decay_t * s_up;
        // X multiplies e^{-i w t}, Y multiplies e^{+i w t}
        out.v -= (std::conj(j2) * x_low + j2 * y_low) / two_pi;
        out.v -= (-std::conj(j3) * third(x_low) - j3 * third(y_low)) / two_pi;
        out.v -= (j2 * x_up + std::conj(j2) * y_up) / two_pi;
        out.v -= (j3 * third(x_up) + std::conj(j3) * third(y_up)) / two_pi;
    }
    return out;
}

OccupationMatrix steady_v(const DeviceParams& device, const BathParams& bath, const QuadratureSpec& quad,
                          LinewidthConvention convention)
{
    OccupationMatrix out;
    out.time = std::numeric_limits<double>::infinity();
    const DecayMatrix decay = decay_matrix(device, convention);
    const auto segments = window_segments(bath.cutoff, seed_points(decay, bath), quad.tail_correction);

    if (!has_dark_mode(device)) {
        auto integrand = [&](double omega) -> ComplexMat2 {
            const ComplexMat2 g = steady_green(decay, omega);
            return g * coupling_source(device, bath, omega) * g.adjoint() / two_pi;
        };
        out.v = integrate_segments<ComplexMat2>(integrand, segments, quad).value;
        return out;
    }

    // M = lambda_b |b><b| + lambda_d |d><d| with W_alpha |d> = 0.
    const DarkModes modes = dark_modes(device);
    const ComplexMat2 bright = outer(modes.bright);
    const Complex lambda_b = (modes.bright.adjoint() * decay.m * modes.bright)(0, 0);
    auto integrand = [&](double omega) -> ComplexMat2 {
        const ComplexMat2 gb = bright / (lambda_b - I * omega);
        return gb * coupling_source(device, bath, omega) * gb.adjoint() / two_pi;
    };
    out.v = integrate_segments<ComplexMat2>(integrand, segments, quad).value;

    // Vanishing-rate limit: lead alpha feeds the dark mode with weight
    // proportional to the opposite linewidth.
    const double e_dark = device.e1;
    const double n_dark = (device.gamma_r * bath.occupation(Lead::left, e_dark) +
                           device.gamma_l * bath.occupation(Lead::right, e_dark)) /
                          device.gamma();
    out.v += n_dark * outer(modes.dark);
    return out;
}

} // namespace abdqd
