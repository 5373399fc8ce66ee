#include "swapsim/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swapsim {

namespace {

constexpr double kSeriesSwitch = 1e-6;  // |Omega| t below which the Taylor branch is used

void require_nonnegative_time(double t, const char* what) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument(std::string(what) + ": time must be >= 0");
    }
}

// cosh(Omega t/2) evaluated directly or, for |Omega| t small, by the 4-term
// Taylor expansion (removes the 0/0 of the companion sinh/Omega term).
Complex cosh_term(Complex omega, double t) {
    const Complex z = omega * (t / 2.0);
    if (std::abs(omega) * t < kSeriesSwitch) {
        const Complex z2 = z * z;
        return 1.0 + z2 / 2.0 + z2 * z2 / 24.0 + z2 * z2 * z2 / 720.0;
    }
    return std::cosh(z);
}

// sinh(Omega t/2)/Omega with the same series switch.
Complex sinh_term(Complex omega, double t) {
    const Complex z = omega * (t / 2.0);
    if (std::abs(omega) * t < kSeriesSwitch) {
        const Complex z2 = z * z;
        return (t / 2.0) * (1.0 + z2 / 6.0 + z2 * z2 / 120.0 + z2 * z2 * z2 / 5040.0);
    }
    return std::sinh(z) / omega;
}

}  // namespace

SystemParams SystemParams::cavity(double coupling_ratio, double delta_over_kappa) {
    SystemParams p{coupling_ratio, 1.0, delta_over_kappa, false};
    p.validate();
    return p;
}

SystemParams SystemParams::ideal(double delta_over_g) {
    SystemParams p{1.0, 0.0, delta_over_g, true};
    p.validate();
    return p;
}

double SystemParams::coupling_ratio() const {
    if (ideal_cavity || kappa <= 0.0) {
        throw std::domain_error("coupling_ratio: undefined for the ideal cavity");
    }
    return g / kappa;
}

void SystemParams::validate() const {
    if (!(g > 0.0)) throw std::invalid_argument("SystemParams: g must be > 0");
    if (!(kappa >= 0.0)) throw std::invalid_argument("SystemParams: kappa must be >= 0");
    if (ideal_cavity && kappa != 0.0) {
        throw std::invalid_argument("SystemParams: ideal_cavity requires kappa = 0");
    }
    if (!ideal_cavity && kappa == 0.0) {
        throw std::invalid_argument("SystemParams: kappa = 0 requires the ideal_cavity flag");
    }
    if (!std::isfinite(delta)) throw std::invalid_argument("SystemParams: delta must be finite");
}

RateConstants rate_constants(const SystemParams& params) {
    params.validate();
    RateConstants rc;
    rc.omega_r = std::sqrt(params.delta * params.delta + 4.0 * params.g * params.g);
    const Complex omega_sq(params.kappa * params.kappa - rc.omega_r * rc.omega_r,
                           2.0 * params.delta * params.kappa);
    Complex omega = std::sqrt(omega_sq);
    if (omega.real() < 0.0 || (omega.real() == 0.0 && omega.imag() < 0.0)) {
        omega = -omega;
    }
    rc.omega = omega;
    const Complex decay(params.kappa, params.delta);  // i delta + kappa
    rc.lambda_plus = (-decay + omega) / 2.0;
    rc.lambda_minus = (-decay - omega) / 2.0;
    return rc;
}

Complex survival_amplitude(const SystemParams& params, double t) {
    require_nonnegative_time(t, "survival_amplitude");
    const RateConstants rc = rate_constants(params);
    const Complex decay(params.kappa, params.delta);
    return std::exp(-decay * (t / 2.0)) *
           (cosh_term(rc.omega, t) + decay * sinh_term(rc.omega, t));
}

Complex gamma_amplitude(const SystemParams& params, double t) {
    require_nonnegative_time(t, "gamma_amplitude");
    const RateConstants rc = rate_constants(params);
    const Complex decay(params.kappa, params.delta);
    return Complex(0.0, -2.0 * params.g) * std::exp(-decay * (t / 2.0)) *
           sinh_term(rc.omega, t);
}

double spectral_density(const SystemParams& params, double omega_offset) {
    params.validate();
    if (params.ideal_cavity || params.kappa <= 0.0) {
        throw std::invalid_argument(
            "spectral_density: point-mass density for the ideal cavity has no finite value");
    }
    return params.g * params.g * params.kappa /
           (std::numbers::pi * (omega_offset * omega_offset + params.kappa * params.kappa));
}

Complex correlation_kernel(const SystemParams& params, double s) {
    params.validate();
    if (!(s >= 0.0)) throw std::invalid_argument("correlation_kernel: s must be >= 0");
    return params.g * params.g * std::exp(Complex(-params.kappa * s, -params.delta * s));
}

double stationary_concurrence_limit(const SystemParams& params) {
    const RateConstants rc = rate_constants(params);
    // Non-degenerate dominant mode: Re(lambda_plus) - Re(lambda_minus) = Re Omega.
    const double scale = std::max(1.0, rc.omega_r);
    if (rc.omega.real() <= 1e-12 * scale) {
        throw std::domain_error(
            "stationary_concurrence_limit: degenerate decay modes, evaluate the concurrence "
            "directly at large tau instead");
    }
    const Complex denom = rc.omega + Complex(params.kappa, params.delta);
    const double r = std::abs(2.0 * params.g / denom);
    const double r2 = r * r;
    return 2.0 * r2 / (1.0 + r2 * r2);
}

}  // namespace swapsim
