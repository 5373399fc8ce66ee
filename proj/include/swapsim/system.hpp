// Physical parameters of one qubit-cavity subsystem and the derived rate
// constants entering the closed-form amplitude dynamics.

#pragma once

#include <complex>

namespace swapsim {

using Complex = std::complex<double>;

// All quantities are expressed in scaled units: for a lossy cavity kappa is
// the time unit (kappa = 1, g = R, delta in units of kappa); for the ideal
// cavity branch (kappa = 0) g is the time unit instead.
struct SystemParams {
    double g = 1.0;       // qubit-cavity coupling
    double kappa = 1.0;   // cavity decay rate, >= 0
    double delta = 0.0;   // detuning omega_c - omega_qb
    bool ideal_cavity = false;

    // Lossy cavity in kappa = 1 units: g = coupling_ratio (R), delta in kappa.
    static SystemParams cavity(double coupling_ratio, double delta_over_kappa = 0.0);

    // Lossless cavity in g = 1 units.
    static SystemParams ideal(double delta_over_g = 0.0);

    // R = g/kappa. Only defined for the lossy branch.
    double coupling_ratio() const;

    void validate() const;
};

// Rate constants of the amplitude solution: Omega_R = sqrt(delta^2 + 4 g^2),
// Omega = sqrt(kappa^2 - Omega_R^2 + 2 i delta kappa) on the branch with
// Re(Omega) >= 0 (ties broken toward Im(Omega) >= 0), and the two exponents
// lambda_pm = (-(i delta + kappa) +- Omega)/2.
struct RateConstants {
    double omega_r = 0.0;
    Complex omega;
    Complex lambda_plus;
    Complex lambda_minus;
};

RateConstants rate_constants(const SystemParams& params);

}  // namespace swapsim
