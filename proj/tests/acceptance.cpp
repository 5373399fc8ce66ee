// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Returns nonzero if any fail.
//
// Usage: swapsim_acceptance [path-to-swapsim-cli]
// The CLI path enables the byte-identical-reruns check (criterion 11).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "swapsim/averaging.hpp"
#include "swapsim/dynamics.hpp"
#include "swapsim/oracles.hpp"
#include "swapsim/qubit_algebra.hpp"
#include "swapsim/swap_protocol.hpp"

using namespace swapsim;

namespace {

constexpr double kPi = std::numbers::pi;

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> check;
};

bool check_amplitude_oracle(std::string& detail) {
    bool ok = true;
    std::ostringstream msg;
    for (const auto& [ratio, detuning] : {std::pair{10.0, 0.0}, {10.0, 15.0}, {0.1, 0.0},
                                          {0.1, 1.5}}) {
        const auto p = SystemParams::cavity(ratio, detuning);
        const auto start = std::chrono::steady_clock::now();
        const oracle::GridSpec rk{3.0, 3000, oracle::VolterraMethod::OdeReduction};
        const oracle::GridSpec trap{3.0, 3000, oracle::VolterraMethod::TrapezoidVolterra};
        const auto via_rk = oracle::solve_volterra_amplitude(p, rk);
        const auto via_trap = oracle::solve_volterra_amplitude(p, trap);
        double sup = 0.0;
        for (std::size_t k = 0; k < via_rk.size(); ++k) {
            const Complex closed = survival_amplitude(p, k * rk.step());
            sup = std::max({sup, std::abs(via_rk[k] - closed), std::abs(via_trap[k] - closed)});
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        msg << " (R=" << ratio << ",d=" << detuning << "): sup=" << sup << " in " << seconds
            << "s";
        ok = ok && sup < 1e-6 && seconds < 1.0;
    }
    detail = msg.str();
    return ok;
}

bool check_gamma_oracle(std::string& detail) {
    double worst = 0.0;
    for (const auto& [ratio, detuning] : {std::pair{10.0, 0.0}, {10.0, 15.0}, {0.1, 0.0},
                                          {0.1, 1.5}}) {
        const auto p = SystemParams::cavity(ratio, detuning);
        for (int k = 0; k <= 3000; ++k) {  // h = 1e-3 over [0, 3]
            const double tau = 1e-3 * k;
            worst = std::max(worst, std::abs(oracle::gamma_by_quadrature(p, tau) -
                                             gamma_amplitude(p, tau)));
        }
    }
    std::ostringstream msg;
    msg << " sup deviation " << worst;
    detail = msg.str();
    return worst < 1e-6;
}

bool check_ideal_cavity(std::string& detail) {
    const auto p = SystemParams::ideal();
    double worst_e = 0.0, worst_g = 0.0, worst_norm = 0.0;
    for (double t = 0.0; t <= 4.0 * kPi; t += 0.005) {
        const Complex e = survival_amplitude(p, t);
        const Complex g = gamma_amplitude(p, t);
        worst_e = std::max(worst_e, std::abs(e - std::cos(t)));
        worst_g = std::max(worst_g, std::abs(g - Complex(0.0, -std::sin(t))));
        worst_norm = std::max(worst_norm, std::abs(std::norm(e) + std::norm(g) - 1.0));
    }
    std::ostringstream msg;
    msg << " |E-cos|=" << worst_e << " |G+i sin|=" << worst_g << " |norm-1|=" << worst_norm;
    detail = msg.str();
    return worst_e < 1e-12 && worst_g < 1e-12 && worst_norm < 1e-12;
}

bool check_markov(std::string& detail) {
    const auto p = SystemParams::cavity(0.05, 0.0);
    double worst = 0.0;
    for (double tau = 0.0; tau <= 50.0; tau += 0.01) {
        const double reference = std::exp(-p.g * p.g * tau);
        worst = std::max(worst,
                         std::abs(std::abs(survival_amplitude(p, tau)) - reference) / reference);
    }
    std::ostringstream msg;
    msg << " max relative deviation " << worst;
    detail = msg.str();
    return worst < 0.01;
}

bool check_peaks(std::string& detail) {
    const auto p = SystemParams::cavity(10.0, 0.0);
    const PairInit excited{};
    std::ostringstream msg;
    bool ok = true;
    const auto roots = maximal_entanglement_times(p, 1.6);
    for (int n = 0; n < 3; ++n) {
        const double tau_n = (2.0 * n * kPi + kPi / 4.0) / 10.0;
        const double conc = concurrence_phi_plus(p, excited, tau_n);
        double nearest = 1e9;
        for (double r : roots) nearest = std::min(nearest, std::abs(r - tau_n));
        msg << " n=" << n << ": E(tau_n)=" << conc << ", root dist=" << nearest << ";";
        ok = ok && conc >= 0.99 && nearest < 2e-2;
    }
    for (double r : roots) {
        if (concurrence_phi_plus(p, excited, r) < 1.0 - 1e-9) {
            msg << " root " << r << " below 1 - 1e-9;";
            ok = false;
        }
    }
    detail = msg.str();
    return ok;
}

bool check_stationary(std::string& detail) {
    const auto p = SystemParams::cavity(10.0, 15.0);
    const PairInit excited{};
    const double at3 = concurrence_phi_plus(p, excited, 3.0);
    const double at5 = concurrence_phi_plus(p, excited, 5.0);
    const double limit = stationary_concurrence_limit(p);
    std::ostringstream msg;
    msg << " E(3)=" << at3 << " (want 0.47 +- 0.01), |limit-E(5)|=" << std::abs(limit - at5)
        << " (want < 1e-3), limit=" << limit;
    detail = msg.str();
    return std::abs(at3 - 0.47) <= 0.01 && std::abs(limit - at5) <= 1e-3;
}

bool check_entropy_identity(std::string& detail) {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> log_g(-1.5, 1.5);
    std::uniform_real_distribution<double> det(-16.0, 16.0);
    std::uniform_real_distribution<double> time(0.0, 4.0);
    AverageSpec spec;
    spec.nodes = 32;
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const auto p = SystemParams::cavity(std::pow(10.0, log_g(rng)), det(rng));
        const double t = time(rng);
        worst = std::max(worst, std::abs(average_linear_entropy(p, t, spec) -
                                         average_linear_entropy_closed(p, t)));
    }
    const double peak = average_linear_entropy(SystemParams::ideal(), kPi / 4.0, spec);
    std::ostringstream msg;
    msg << " max |quad-closed|=" << worst << ", value at eps=1/2: " << peak;
    detail = msg.str();
    return worst < 1e-9 && std::abs(peak - 1.0 / 6.0) < 1e-9;
}

bool check_psi_minus_stationarity(std::string& detail) {
    const auto p = SystemParams::cavity(0.1, 0.0);
    const PairInit matched{kPi / 3.0, 1.3, kPi / 3.0, 1.3};
    double mean = 0.0;
    std::vector<double> values(1000);
    for (int k = 0; k < 1000; ++k) {
        values[k] = concurrence_psi_minus(p, matched, 5.0 * k / 999.0);
        mean += values[k];
    }
    mean /= 1000.0;
    double variance = 0.0;
    for (double v : values) variance += (v - mean) * (v - mean);
    variance /= 1000.0;

    std::mt19937_64 rng(8888);
    std::uniform_real_distribution<double> log_g(-1.0, 1.3);
    std::uniform_real_distribution<double> det(-16.0, 16.0);
    std::uniform_real_distribution<double> theta(0.0, kPi - 1e-3);
    std::uniform_real_distribution<double> phi(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> time(0.0, 3.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const auto params = SystemParams::cavity(std::pow(10.0, log_g(rng)), det(rng));
        const PairInit init{theta(rng), phi(rng), theta(rng), phi(rng)};
        const double tau = time(rng);
        const double closed = concurrence_psi_minus(params, init, tau);
        const double via_state =
            concurrence_pure(post_bsm_state(BellChannel::PsiMinus, params, init, tau));
        worst = std::max(worst, std::abs(closed - via_state));
    }
    std::ostringstream msg;
    msg << " variance=" << variance << " (mean " << mean << "), max |closed-state|=" << worst;
    detail = msg.str();
    return variance < 1e-20 && worst < 1e-10;
}

bool check_concurrence_cross_validation(std::string& detail) {
    std::mt19937_64 rng(13579);
    std::normal_distribution<double> normal;
    double worst_pure = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const auto s = PureTwoQubitState::normalized(
            {normal(rng), normal(rng)}, {normal(rng), normal(rng)}, {normal(rng), normal(rng)},
            {normal(rng), normal(rng)});
        worst_pure = std::max(worst_pure,
                              std::abs(concurrence_pure(s) -
                                       concurrence_wootters(DensityMatrix4::projector(s))));
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const PureTwoQubitState bell{0.0, inv_sqrt2, -inv_sqrt2, 0.0};
    double worst_werner = 0.0;
    for (double p = 0.0; p <= 1.0001; p += 0.2) {
        const double pw = std::min(p, 1.0);
        auto rho = DensityMatrix4::projector(bell);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                rho.at(i, j) *= pw;
                if (i == j) rho.at(i, j) += (1.0 - pw) / 4.0;
            }
        }
        const double expected = std::max(0.0, (3.0 * pw - 1.0) / 2.0);
        worst_werner = std::max(worst_werner, std::abs(concurrence_wootters(rho) - expected));
    }
    std::ostringstream msg;
    msg << " max pure dev=" << worst_pure << ", max Werner dev=" << worst_werner;
    detail = msg.str();
    return worst_pure < 1e-8 && worst_werner < 1e-8;
}

bool check_epower_consistency(std::string& detail) {
    std::ostringstream msg;
    bool ok = true;
    AverageSpec quad;
    quad.nodes = 64;
    for (const auto& [ratio, detuning] : {std::pair{10.0, 0.0}, {0.1, 1.5}}) {
        const auto p = SystemParams::cavity(ratio, detuning);
        for (double tau : {0.1, 0.5, 1.0}) {
            for (auto channel : {BellChannel::PsiMinus, BellChannel::PhiPlus}) {
                const double q = entangling_power(channel, p, tau, quad);
                const auto mc = entangling_power_mc(channel, p, tau, 200000, 42);
                const bool in_bounds = q >= 0.0 && q <= 1.0 && mc.mean >= 0.0 && mc.mean <= 1.0;
                const bool agrees = std::abs(mc.mean - q) < 3.0 * std::max(mc.std_error, 1e-12);
                if (!(in_bounds && agrees)) {
                    msg << " FAIL " << to_string(channel) << " R=" << ratio << " d=" << detuning
                        << " tau=" << tau << " quad=" << q << " mc=" << mc.mean
                        << " stderr=" << mc.std_error << ";";
                    ok = false;
                }
            }
        }
    }
    const double zero =
        entangling_power(BellChannel::PhiPlus, SystemParams::cavity(10.0, 0.0), 0.0, quad);
    if (zero != 0.0) {
        msg << " Phi+ epower(0) = " << zero << " != 0;";
        ok = false;
    }
    if (ok) msg << " all 12 points within 3 standard errors, bounds hold, Phi+ E(0) = 0";
    detail = msg.str();
    return ok;
}

bool check_cli_determinism(std::string& detail, const std::string& cli_path) {
    if (cli_path.empty()) {
        detail = " no CLI path given (pass it as argv[1])";
        return false;
    }
    const std::string out_a = "acceptance_run_a.csv";
    const std::string out_b = "acceptance_run_b.csv";
    const std::string base = "\"" + cli_path +
                             "\" epower --channel psi-minus --r 10 --delta 0 --scheme mc "
                             "--samples 50000 --seed 42 --tau-max 0.2 --tau-step 0.05 --out ";
    if (std::system((base + out_a).c_str()) != 0 || std::system((base + out_b).c_str()) != 0) {
        detail = " CLI invocation failed";
        return false;
    }
    const auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string a = slurp(out_a);
    const std::string b = slurp(out_b);
    std::remove(out_a.c_str());
    std::remove(out_b.c_str());
    if (a.empty() || a != b) {
        detail = " outputs differ or are empty";
        return false;
    }
    detail = " two runs byte-identical (" + std::to_string(a.size()) + " bytes)";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";
    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence for the survival amplitude", check_amplitude_oracle},
        {2, "oracle equivalence for Gamma", check_gamma_oracle},
        {3, "ideal-cavity limit", check_ideal_cavity},
        {4, "Markovian decay property", check_markov},
        {5, "strong-coupling concurrence peaks", check_peaks},
        {6, "detuned stationary concurrence", check_stationary},
        {7, "averaged-entropy identity", check_entropy_identity},
        {8, "psi- stationarity and closed-form equality", check_psi_minus_stationarity},
        {9, "concurrence cross-validation", check_concurrence_cross_validation},
        {10, "entangling-power scheme consistency", check_epower_consistency},
        {11, "CLI determinism",
         [&](std::string& d) { return check_cli_determinism(d, cli_path); }},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.check(detail);
        } catch (const std::exception& e) {
            detail = std::string(" exception: ") + e.what();
        }
        std::printf("%s criterion %2d: %s —%s\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.name, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures) {
        std::printf("%d of %zu criteria failing\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria pass\n", criteria.size());
    return 0;
}
