// core.cpp — Parameter helpers and validation

#include "abdqd/core.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace abdqd {

DeviceParams DeviceParams::degenerate(double gamma, double delta_gamma, double phi)
{
    DeviceParams d;
    d.e1 = 0.0;
    d.e2 = 0.0;
    d.gamma_l = 0.5 * (gamma + delta_gamma);
    d.gamma_r = 0.5 * (gamma - delta_gamma);
    d.phi = phi;
    return d;
}

double fermi(double omega, double mu, double temperature)
{
    const double x = omega - mu;
    if (temperature <= 0.0) {
        if (x < 0.0) return 1.0;
        if (x > 0.0) return 0.0;
        return 0.5;
    }
    // 1/(e^y + 1) written through tanh so it never overflows
    return 0.5 * (1.0 - std::tanh(0.5 * x / temperature));
}

double BathParams::occupation(Lead lead, double omega) const
{
    return fermi(omega, chemical_potential(lead), temperature);
}

BathParams BathParams::symmetric_bias(double bias, double temperature, double cutoff)
{
    BathParams b;
    b.mu_l = 0.5 * bias;
    b.mu_r = -0.5 * bias;
    b.temperature = temperature;
    b.cutoff = cutoff;
    return b;
}

std::string ValidationReport::summary() const
{
    if (ok()) return "ok";
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v;
    }
    return out;
}

ValidationReport validate(const DeviceParams& device, const BathParams& bath)
{
    ValidationReport report;
    auto& v = report.violations;

    const double values[] = {device.e1, device.e2, device.gamma_l, device.gamma_r, device.phi,
                             bath.mu_l, bath.mu_r, bath.temperature, bath.cutoff};
    if (!std::all_of(std::begin(values), std::end(values), [](double x) { return std::isfinite(x); })) {
        v.emplace_back("all parameters must be finite");
        return report;
    }

    if (device.gamma_l < 0.0) v.emplace_back("gamma_l must be non-negative");
    if (device.gamma_r < 0.0) v.emplace_back("gamma_r must be non-negative");
    const double gamma = device.gamma();
    if (!(gamma > 0.0)) v.emplace_back("Gamma = gamma_l + gamma_r must be positive");

    if (bath.temperature < 0.0) v.emplace_back("temperature must be non-negative");
    if (!(bath.cutoff > 0.0)) {
        v.emplace_back("cutoff must be positive");
    } else if (gamma > 0.0) {
        const double needed = std::max(std::abs(bath.mu_l), std::abs(bath.mu_r)) + 10.0 * gamma;
        if (bath.cutoff <= needed) {
            v.push_back(fmt::format("cutoff too small: D = {} but the window needs D > {}", bath.cutoff, needed));
        }
        const double levels = std::max(std::abs(device.e1), std::abs(device.e2)) + 10.0 * gamma;
        if (bath.cutoff <= levels) {
            v.push_back(fmt::format("cutoff too small for the dot levels: D = {} but needs D > {}",
                                    bath.cutoff, levels));
        }
    }
    return report;
}

DeviceParams rescaled(const DeviceParams& device, double factor)
{
    DeviceParams d = device;
    d.e1 *= factor;
    d.e2 *= factor;
    d.gamma_l *= factor;
    d.gamma_r *= factor;
    return d;
}

BathParams rescaled(const BathParams& bath, double factor)
{
    BathParams b = bath;
    b.mu_l *= factor;
    b.mu_r *= factor;
    b.temperature *= factor;
    b.cutoff *= factor;
    return b;
}

} // namespace abdqd
