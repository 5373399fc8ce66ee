#include "swapsim/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "swapsim/dynamics.hpp"
#include "swapsim/quadrature.hpp"

namespace swapsim::oracle {

namespace {

void check_stability(const SystemParams& params, double h) {
    const RateConstants rc = rate_constants(params);
    if (std::abs(rc.omega) * h > 0.1) {
        throw std::invalid_argument(
            "solve_volterra_amplitude: step too coarse for stability (|Omega| h > 0.1)");
    }
}

// Classical RK4 on the kernel-eliminated system y' = g^2 C - (kappa + i d) y,
// C' = -y, C(0) = 1, y(0) = 0.
std::vector<Complex> rk4_reduction(const SystemParams& params, const GridSpec& grid) {
    const double h = grid.step();
    const Complex lam(params.kappa, params.delta);
    const double g_sq = params.g * params.g;
    std::vector<Complex> out(grid.steps + 1);
    Complex c(1.0), y(0.0);
    out[0] = c;
    const auto fc = [](const Complex& yv) { return -yv; };
    const auto fy = [&](const Complex& cv, const Complex& yv) { return g_sq * cv - lam * yv; };
    for (int k = 0; k < grid.steps; ++k) {
        const Complex k1c = fc(y), k1y = fy(c, y);
        const Complex k2c = fc(y + 0.5 * h * k1y), k2y = fy(c + 0.5 * h * k1c, y + 0.5 * h * k1y);
        const Complex k3c = fc(y + 0.5 * h * k2y), k3y = fy(c + 0.5 * h * k2c, y + 0.5 * h * k2y);
        const Complex k4c = fc(y + h * k3y), k4y = fy(c + h * k3c, y + h * k3y);
        c += h / 6.0 * (k1c + 2.0 * k2c + 2.0 * k3c + k4c);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        out[k + 1] = c;
    }
    return out;
}

// Implicit trapezoid in time with trapezoidal memory sums on the Volterra
// form directly. Second order; one pass at h/2 plus Richardson recovers the
// accuracy the dual-method comparison needs.
std::vector<Complex> trapezoid_volterra_plain(const SystemParams& params, int steps, double h) {
    const Complex lam(params.kappa, params.delta);
    const double g_sq = params.g * params.g;
    std::vector<Complex> kernel(steps + 1);
    for (int k = 0; k <= steps; ++k) {
        kernel[k] = correlation_kernel(params, k * h);
    }
    std::vector<Complex> c(steps + 1), cdot(steps + 1);
    c[0] = 1.0;
    cdot[0] = 0.0;
    const double gain = 1.0 / (1.0 + h * h * g_sq / 4.0);
    for (int m = 1; m <= steps; ++m) {
        Complex memory(0.0);  // trapezoid over [0, t_m] excluding the j = m endpoint
        for (int j = 1; j < m; ++j) memory += kernel[m - j] * c[j];
        memory += 0.5 * kernel[m] * c[0];
        memory *= h;
        c[m] = gain * (c[m - 1] + 0.5 * h * cdot[m - 1] - 0.5 * h * memory);
        cdot[m] = -(memory + 0.5 * h * g_sq * c[m]);
    }
    return c;
}

std::vector<Complex> trapezoid_volterra(const SystemParams& params, const GridSpec& grid) {
    const double h = grid.step();
    const auto coarse = trapezoid_volterra_plain(params, grid.steps, h);
    const auto fine = trapezoid_volterra_plain(params, 2 * grid.steps, 0.5 * h);
    std::vector<Complex> out(grid.steps + 1);
    for (int k = 0; k <= grid.steps; ++k) {
        out[k] = (4.0 * fine[2 * k] - coarse[k]) / 3.0;
    }
    return out;
}

}  // namespace

void GridSpec::validate() const {
    if (steps < 10) throw std::invalid_argument("GridSpec: steps must be >= 10");
    if (!(t_max > 0.0)) throw std::invalid_argument("GridSpec: t_max must be > 0");
}

std::vector<Complex> solve_volterra_amplitude(const SystemParams& params, const GridSpec& grid) {
    params.validate();
    grid.validate();
    check_stability(params, grid.step());
    if (grid.method == VolterraMethod::OdeReduction) {
        return rk4_reduction(params, grid);
    }
    return trapezoid_volterra(params, grid);
}

Complex gamma_by_quadrature(const SystemParams& params, double t) {
    params.validate();
    if (!(t >= 0.0)) throw std::invalid_argument("gamma_by_quadrature: t must be >= 0");
    if (params.kappa <= 0.0) {
        throw std::invalid_argument("gamma_by_quadrature: requires a lossy cavity (kappa > 0)");
    }
    if (t == 0.0) return {0.0, 0.0};
    const Complex lam(params.kappa, params.delta);
    const auto integrand = [&](double t1) {
        return survival_amplitude(params, t1) * std::exp(-lam * (t - t1));
    };
    const Complex integral = adaptive_simpson(integrand, 0.0, t, 1e-9);
    return Complex(0.0, -params.g) * integral;
}

double haar_average_quadrature(const BlochFunction& f, int nodes) {
    if (nodes < 1) throw std::invalid_argument("haar_average_quadrature: nodes must be >= 1");
    const GaussLegendre gl = gauss_legendre01(nodes);
    const int n_ang = 2 * nodes;
    const double two_pi = 2.0 * std::numbers::pi;
    double total = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double theta1 = 2.0 * std::acos(std::sqrt(gl.x[i]));
        for (int j = 0; j < nodes; ++j) {
            const double theta2 = 2.0 * std::acos(std::sqrt(gl.x[j]));
            const double wx = gl.w[i] * gl.w[j];
            double ang_sum = 0.0;
            for (int ku = 0; ku < n_ang; ++ku) {
                const double u = two_pi * ku / n_ang;
                for (int kv = 0; kv < n_ang; ++kv) {
                    const double v = two_pi * kv / n_ang;
                    double phi1 = std::fmod(0.5 * (u + v), two_pi);
                    double phi2 = std::fmod(0.5 * (v - u) + two_pi, two_pi);
                    if (phi1 < 0.0) phi1 += two_pi;
                    ang_sum += f(theta1, phi1, theta2, phi2);
                }
            }
            total += wx * ang_sum / (static_cast<double>(n_ang) * n_ang);
        }
    }
    return total;
}

McResult haar_average_montecarlo(const BlochFunction& f, long samples, std::uint64_t seed) {
    if (samples < 100) {
        throw std::invalid_argument("haar_average_montecarlo: samples must be >= 100");
    }
    HaarSampler sampler(seed);
    double sum = 0.0, sum_sq = 0.0;
    for (long k = 0; k < samples; ++k) {
        const HaarPoint p = sampler.next();
        const double value = f(p.theta1, p.phi1, p.theta2, p.phi2);
        sum += value;
        sum_sq += value * value;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
    return {mean, std::sqrt(var / n)};
}

}  // namespace swapsim::oracle
