// Independent brute-force solvers used by the test suites to validate every
// closed form. Nothing here is called from the production path.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "swapsim/system.hpp"

namespace swapsim::oracle {

enum class VolterraMethod { OdeReduction, TrapezoidVolterra };

struct GridSpec {
    double t_max = 1.0;
    int steps = 1000;
    VolterraMethod method = VolterraMethod::OdeReduction;

    double step() const { return t_max / steps; }
    void validate() const;
};

// Normalized excited-state amplitude C(tau_k)/C(0) on the grid tau_k = k h,
// k = 0..steps, solving the memory-kernel equation directly.
//   OdeReduction: the exponential kernel reduces the equation to
//     y' = g^2 C - (kappa + i delta) y, C' = -y, integrated by classical RK4.
//   TrapezoidVolterra: trapezoidal memory sums with implicit trapezoid
//     stepping, plus one Richardson extrapolation level (h and h/2).
// Throws if |Omega| h > 0.1 (step too coarse).
std::vector<Complex> solve_volterra_amplitude(const SystemParams& params, const GridSpec& grid);

// Gamma(t) evaluated from its defining integral
//   -i g \int_0^t E(t1) e^{-(i delta + kappa)(t - t1)} dt1
// by adaptive Simpson quadrature (absolute tolerance 1e-9). The inner
// frequency integral over the Lorentzian pulse closes analytically to the
// decaying exponential above.
Complex gamma_by_quadrature(const SystemParams& params, double t);

using BlochFunction = std::function<double(double theta1, double phi1, double theta2, double phi2)>;

// Haar average over both Bloch spheres: Gauss-Legendre in x_i = cos^2(theta_i/2)
// (nodes points each) and periodic trapezoid (2*nodes points) in each of the
// relative angles u = phi1 - phi2 and v = phi1 + phi2. Exact for integrands
// with integer harmonics in u and v, which covers every implemented one.
double haar_average_quadrature(const BlochFunction& f, int nodes);

struct McResult {
    double mean = 0.0;
    double std_error = 0.0;
};

// Monte Carlo Haar average with the exact factorization x = cos^2(theta/2)
// uniform; deterministic for fixed (seed, samples), fixed-order accumulation.
McResult haar_average_montecarlo(const BlochFunction& f, long samples, std::uint64_t seed);

}  // namespace swapsim::oracle
