// experiments.hpp — The experiments behind the command-line subcommands
//
// Each returns a ResultTable with its metadata block already stamped. Grid
// points are evaluated concurrently; rows always come back in grid order.

#pragma once

#include <string>
#include <vector>

#include "abdqd/config.hpp"
#include "abdqd/result_table.hpp"

namespace abdqd {

// t, rho00, rho11, rho22, rho33, re_rho21, im_rho21, rx, ry, rz, leakage, phase, fidelity
ResultTable cmd_time_trace(const RunConfig& config);

// phi, re_rho21, im_rho21, abs_rho21, phase, fidelity_to_psi_phi, closed_form_re, closed_form_im
// The closed-form columns are the zero-temperature values (NaN unless E1 + E2 = 0).
ResultTable cmd_flux_sweep(const RunConfig& config);

// omega, phi, T over the omega x phi grid (phi outer).
ResultTable cmd_transmission_scan(const RunConfig& config);

// phi, I; metadata `period_residual` = max |I(phi) - I(phi + 2 pi)|.
ResultTable cmd_current_vs_flux(const RunConfig& config);

struct VerifyCheck {
    std::string name;
    double residual;
    double tolerance;
    bool passed;
    std::string message;
};

struct VerifyOutcome {
    ResultTable table; // check, residual, tolerance, pass
    std::vector<VerifyCheck> checks;
    bool passed() const;
};

VerifyOutcome cmd_verify(const RunConfig& config);

} // namespace abdqd
