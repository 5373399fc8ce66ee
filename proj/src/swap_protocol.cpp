#include "swapsim/swap_protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "swapsim/dynamics.hpp"

namespace swapsim {

namespace {

constexpr double kZeroProbTol = 1e-14;

struct ReducedAmplitudes {
    Complex a, b, c, d;  // |ee>, |eg>, |ge>, |gg>, before normalization
};

// Unnormalized conditional amplitudes with the common photon-overlap factor of
// the Psi channels cancelled. c_i = cos(theta_i/2), d_i = sin(theta_i/2)e^{i phi_i}.
ReducedAmplitudes reduced_amplitudes(BellChannel channel, const SystemParams& params,
                                     const PairInit& init, double t) {
    const Complex c1 = init.qubit1().excited_amp();
    const Complex c2 = init.qubit2().excited_amp();
    const Complex d1 = init.qubit1().ground_amp();
    const Complex d2 = init.qubit2().ground_amp();
    const Complex surv = survival_amplitude(params, t);
    switch (channel) {
        case BellChannel::PsiMinus:
            return {0.0, c1 * c2 * surv, -c1 * c2 * surv, d1 * c2 - d2 * c1};
        case BellChannel::PsiPlus:
            return {0.0, c1 * c2 * surv, c1 * c2 * surv, d1 * c2 + d2 * c1};
        case BellChannel::PhiPlus: {
            const Complex gam = gamma_amplitude(params, t);
            return {c1 * c2 * surv * surv, c1 * surv * d2, d1 * c2 * surv,
                    d1 * d2 + c1 * c2 * gam * gam};
        }
        case BellChannel::PhiMinus: {
            const Complex gam = gamma_amplitude(params, t);
            return {c1 * c2 * surv * surv, c1 * surv * d2, d1 * c2 * surv,
                    d1 * d2 - c1 * c2 * gam * gam};
        }
    }
    throw std::invalid_argument("reduced_amplitudes: unknown channel");
}

}  // namespace

void PairInit::validate() const {
    qubit1().validate();
    qubit2().validate();
}

const char* to_string(BellChannel channel) {
    switch (channel) {
        case BellChannel::PsiMinus: return "psi-minus";
        case BellChannel::PsiPlus: return "psi-plus";
        case BellChannel::PhiPlus: return "phi-plus";
        case BellChannel::PhiMinus: return "phi-minus";
    }
    return "?";
}

PureTwoQubitState post_bsm_state(BellChannel channel, const SystemParams& params,
                                 const PairInit& init, double t) {
    init.validate();
    const ReducedAmplitudes amp = reduced_amplitudes(channel, params, init, t);
    const double n2 = std::norm(amp.a) + std::norm(amp.b) + std::norm(amp.c) + std::norm(amp.d);
    if (n2 < kZeroProbTol) {
        throw std::domain_error("post_bsm_state: zero-probability measurement outcome");
    }
    const double inv = 1.0 / std::sqrt(n2);
    return {amp.a * inv, amp.b * inv, amp.c * inv, amp.d * inv};
}

double concurrence_psi_minus(const SystemParams& params, const PairInit& init, double t) {
    init.validate();
    const double c1sq = std::cos(init.theta1 / 2.0) * std::cos(init.theta1 / 2.0);
    const double c2sq = std::cos(init.theta2 / 2.0) * std::cos(init.theta2 / 2.0);
    const double t1 = 2.0 * c1sq * c2sq * std::norm(survival_amplitude(params, t));
    const double t2 = 0.5 * (1.0 - std::cos(init.theta1) * std::cos(init.theta2) -
                             std::sin(init.theta1) * std::sin(init.theta2) *
                                 std::cos(init.phi1 - init.phi2));
    if (t1 + t2 < kZeroProbTol) {
        throw std::domain_error("concurrence_psi_minus: zero-probability measurement outcome");
    }
    return std::clamp(t1 / (t1 + t2), 0.0, 1.0);
}

double concurrence_phi_plus(const SystemParams& params, const PairInit& init, double t) {
    init.validate();
    const double c1sq = std::cos(init.theta1 / 2.0) * std::cos(init.theta1 / 2.0);
    const double c2sq = std::cos(init.theta2 / 2.0) * std::cos(init.theta2 / 2.0);
    const double s1sq = 1.0 - c1sq;
    const double s2sq = 1.0 - c2sq;
    const Complex gam = gamma_amplitude(params, t);
    const double e2 = std::norm(survival_amplitude(params, t));
    const double g2 = std::norm(gam);
    const Complex phase(std::cos(init.phi1 + init.phi2), -std::sin(init.phi1 + init.phi2));
    // Cross-term sign follows the constructed |gg> amplitude d1 d2 + c1 c2 Gamma^2.
    const double norm_plus = c1sq * c2sq * (e2 * e2 + g2 * g2) +
                             0.5 * e2 * (1.0 - std::cos(init.theta1) * std::cos(init.theta2)) +
                             s1sq * s2sq +
                             0.5 * std::sin(init.theta1) * std::sin(init.theta2) *
                                 (phase * gam * gam).real();
    if (norm_plus < kZeroProbTol) {
        throw std::domain_error("concurrence_phi_plus: zero-probability measurement outcome");
    }
    const double t_num = 2.0 * c1sq * c2sq * e2 * g2;
    return std::clamp(t_num / norm_plus, 0.0, 1.0);
}

double channel_concurrence(BellChannel channel, const SystemParams& params,
                           const PairInit& init, double t) {
    switch (channel) {
        case BellChannel::PsiMinus: return concurrence_psi_minus(params, init, t);
        case BellChannel::PhiPlus: return concurrence_phi_plus(params, init, t);
        default: return concurrence_pure(post_bsm_state(channel, params, init, t));
    }
}

std::vector<double> maximal_entanglement_times(const SystemParams& params, double tau_max) {
    params.validate();
    if (!(tau_max > 0.0)) {
        throw std::invalid_argument("maximal_entanglement_times: tau_max must be > 0");
    }
    const auto balance = [&](double t) {
        return std::abs(survival_amplitude(params, t)) - std::abs(gamma_amplitude(params, t));
    };
    constexpr double kScanStep = 1e-3;
    constexpr double kBisectTol = 1e-10;
    std::vector<double> roots;
    double t_prev = 0.0;
    double f_prev = balance(0.0);  // = 1
    const long n_steps = static_cast<long>(std::ceil(tau_max / kScanStep));
    for (long k = 1; k <= n_steps; ++k) {
        const double t_cur = std::min(k * kScanStep, tau_max);
        const double f_cur = balance(t_cur);
        if (f_cur == 0.0) {
            roots.push_back(t_cur);
        } else if (f_prev * f_cur < 0.0) {
            double lo = t_prev, hi = t_cur, f_lo = f_prev;
            while (hi - lo > kBisectTol) {
                const double mid = 0.5 * (lo + hi);
                const double f_mid = balance(mid);
                if (f_mid == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (f_lo * f_mid < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    f_lo = f_mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        t_prev = t_cur;
        f_prev = f_cur;
    }
    return roots;
}

}  // namespace swapsim
