#include "swapsim/averaging.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "swapsim/dynamics.hpp"
#include "swapsim/quadrature.hpp"

namespace swapsim {

namespace {

// Closed-form channel concurrence in the Haar variables x_i = cos^2(theta_i/2)
// and the single relevant relative angle (u = phi1 - phi2 for the Psi
// channels, v = phi1 + phi2 for the Phi channels). Finite almost everywhere;
// vanishing denominators sit on the measure-zero zero-probability set and
// contribute 0.
double psi_integrand(double x1, double x2, double cos_u, double e_sq, bool plus_sign) {
    const double t1 = 2.0 * x1 * x2 * e_sq;
    const double cross = 2.0 * std::sqrt(x1 * x2 * (1.0 - x1) * (1.0 - x2)) * cos_u;
    const double t2 = (1.0 - x1) * x2 + x1 * (1.0 - x2) + (plus_sign ? cross : -cross);
    const double denom = t1 + t2;
    if (denom < 1e-300) return 0.0;
    return t1 / denom;
}

double phi_integrand(double x1, double x2, double re_phase_gamma_sq, double e_sq, double g_sq,
                     bool plus_sign) {
    const double e4 = e_sq * e_sq;
    const double g4 = g_sq * g_sq;
    const double cos_th1 = 2.0 * x1 - 1.0;
    const double cos_th2 = 2.0 * x2 - 1.0;
    const double cross = 2.0 * std::sqrt(x1 * x2 * (1.0 - x1) * (1.0 - x2)) * re_phase_gamma_sq;
    const double denom = x1 * x2 * (e4 + g4) + 0.5 * e_sq * (1.0 - cos_th1 * cos_th2) +
                         (1.0 - x1) * (1.0 - x2) + (plus_sign ? cross : -cross);
    if (denom < 1e-300) return 0.0;
    return 2.0 * x1 * x2 * e_sq * g_sq / denom;
}

double quadrature_epower(BellChannel channel, const SystemParams& params, double t, int nodes) {
    const GaussLegendre gl = gauss_legendre01(nodes);
    const int n_ang = 2 * nodes;
    const double e_sq = std::norm(survival_amplitude(params, t));
    const bool is_psi = channel == BellChannel::PsiMinus || channel == BellChannel::PsiPlus;
    const bool plus_sign = channel == BellChannel::PsiPlus || channel == BellChannel::PhiPlus;

    Complex gamma_sq(0.0);
    double g_sq = 0.0;
    if (!is_psi) {
        const Complex gam = gamma_amplitude(params, t);
        gamma_sq = gam * gam;
        g_sq = std::norm(gam);
    }

    double total = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double x1 = gl.x[i];
        for (int j = 0; j < nodes; ++j) {
            const double x2 = gl.x[j];
            const double wx = gl.w[i] * gl.w[j];
            double ang_sum = 0.0;
            for (int k = 0; k < n_ang; ++k) {
                const double ang = 2.0 * std::numbers::pi * k / n_ang;
                if (is_psi) {
                    ang_sum += psi_integrand(x1, x2, std::cos(ang), e_sq, plus_sign);
                } else {
                    // Re(e^{-i v} Gamma^2)
                    const double re_term =
                        gamma_sq.real() * std::cos(ang) + gamma_sq.imag() * std::sin(ang);
                    ang_sum += phi_integrand(x1, x2, re_term, e_sq, g_sq, plus_sign);
                }
            }
            total += wx * ang_sum / n_ang;
        }
    }
    return total;
}

}  // namespace

void AverageSpec::validate() const {
    if (scheme == AverageScheme::Quadrature && nodes < 8) {
        throw std::invalid_argument("AverageSpec: quadrature needs nodes >= 8");
    }
    if (scheme == AverageScheme::MonteCarlo && samples < 1000) {
        throw std::invalid_argument("AverageSpec: montecarlo needs samples >= 1000");
    }
}

double average_linear_entropy_closed(const SystemParams& params, double t) {
    const double eps = std::norm(survival_amplitude(params, t));
    return (2.0 / 3.0) * eps * (1.0 - eps);
}

double average_linear_entropy(const SystemParams& params, double t, const AverageSpec& spec) {
    spec.validate();
    const double eps = std::norm(survival_amplitude(params, t));
    // S(theta; t) = 2 x^2 eps (1 - eps) with x = cos^2(theta/2), phi-free.
    if (spec.scheme == AverageScheme::Quadrature) {
        const GaussLegendre gl = gauss_legendre01(spec.nodes);
        double total = 0.0;
        for (int i = 0; i < spec.nodes; ++i) {
            total += gl.w[i] * 2.0 * gl.x[i] * gl.x[i] * eps * (1.0 - eps);
        }
        return total;
    }
    HaarSampler sampler(spec.seed);
    double sum = 0.0;
    for (long k = 0; k < spec.samples; ++k) {
        const HaarPoint p = sampler.next();
        const double x = std::cos(p.theta1 / 2.0) * std::cos(p.theta1 / 2.0);
        sum += 2.0 * x * x * eps * (1.0 - eps);
    }
    return sum / static_cast<double>(spec.samples);
}

double entangling_power(BellChannel channel, const SystemParams& params, double t,
                        const AverageSpec& spec) {
    spec.validate();
    if (spec.scheme == AverageScheme::Quadrature) {
        return quadrature_epower(channel, params, t, spec.nodes);
    }
    return entangling_power_mc(channel, params, t, spec.samples, spec.seed).mean;
}

MonteCarloEstimate entangling_power_mc(BellChannel channel, const SystemParams& params,
                                       double t, long samples, std::uint64_t seed) {
    if (samples < 2) throw std::invalid_argument("entangling_power_mc: samples must be >= 2");
    const double e_sq = std::norm(survival_amplitude(params, t));
    const bool is_psi = channel == BellChannel::PsiMinus || channel == BellChannel::PsiPlus;
    const bool plus_sign = channel == BellChannel::PsiPlus || channel == BellChannel::PhiPlus;
    Complex gamma_sq(0.0);
    double g_sq = 0.0;
    if (!is_psi) {
        const Complex gam = gamma_amplitude(params, t);
        gamma_sq = gam * gam;
        g_sq = std::norm(gam);
    }
    HaarSampler sampler(seed);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (long k = 0; k < samples; ++k) {
        const HaarPoint p = sampler.next();
        const double x1 = std::cos(p.theta1 / 2.0) * std::cos(p.theta1 / 2.0);
        const double x2 = std::cos(p.theta2 / 2.0) * std::cos(p.theta2 / 2.0);
        double value;
        if (is_psi) {
            value = psi_integrand(x1, x2, std::cos(p.phi1 - p.phi2), e_sq, plus_sign);
        } else {
            const double v = p.phi1 + p.phi2;
            const double re_term = gamma_sq.real() * std::cos(v) + gamma_sq.imag() * std::sin(v);
            value = phi_integrand(x1, x2, re_term, e_sq, g_sq, plus_sign);
        }
        sum += value;
        sum_sq += value * value;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
    return {mean, std::sqrt(var / n)};
}

}  // namespace swapsim
