// swapsim: parameter sweeps of the dissipative entanglement-swapping model.
//
//   swapsim <quantity> [options]     quantity: amplitude | gamma | entropy-avg |
//                                    concurrence | epower | peak-times
//   swapsim fig --id 4a [--out PATH]
//
// Exit codes: 0 success, 1 numerical failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "swapsim/sweep.hpp"

namespace {

using namespace swapsim;

BellChannel channel_from_string(const std::string& name) {
    if (name == "psi-minus") return BellChannel::PsiMinus;
    if (name == "psi-plus") return BellChannel::PsiPlus;
    if (name == "phi-plus") return BellChannel::PhiPlus;
    if (name == "phi-minus") return BellChannel::PhiMinus;
    throw std::invalid_argument("unknown channel '" + name +
                                "' (psi-minus, psi-plus, phi-plus, phi-minus)");
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SWAPSIM_SEED")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return value;
        std::cerr << "swapsim: ignoring malformed SWAPSIM_SEED\n";
    }
    return 42;
}

void emit(const TimeSeries& series, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << emit_csv(series);
    } else {
        write_csv(series, out_path);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dynamics and swapped entanglement of two qubits in lossy cavities"};
    app.set_config("--config")->description("key=value file; command-line flags win");

    std::string quantity_name;
    std::string channel_name = "psi-minus";
    std::string scheme_name = "q";
    std::string out_path;
    double ratio = 10.0;
    double delta = 0.0;
    bool ideal = false;
    double theta1 = 0.0, phi1 = 0.0, theta2 = 0.0, phi2 = 0.0;
    double tau_max = 2.0, tau_step = 0.01;
    int nodes = 32;
    long samples = 200000;
    std::uint64_t seed = default_seed();

    app.add_option("quantity", quantity_name,
                   "amplitude | gamma | entropy-avg | concurrence | epower | peak-times");
    app.add_option("--channel", channel_name, "Bell measurement channel");
    app.add_option("--r", ratio, "coupling ratio R = g/kappa");
    app.add_option("--delta", delta, "detuning in units of kappa (of g when --ideal)");
    app.add_flag("--ideal", ideal, "lossless cavity branch (kappa = 0, g = 1 units)");
    app.add_option("--theta1", theta1, "Bloch polar angle of qubit 1");
    app.add_option("--phi1", phi1, "Bloch azimuth of qubit 1");
    app.add_option("--theta2", theta2, "Bloch polar angle of qubit 2");
    app.add_option("--phi2", phi2, "Bloch azimuth of qubit 2");
    app.add_option("--tau-max", tau_max, "end of the scaled-time grid");
    app.add_option("--tau-step", tau_step, "grid step");
    app.add_option("--scheme", scheme_name, "averaging scheme: q (quadrature) or mc");
    app.add_option("--nodes", nodes, "Gauss-Legendre nodes per x variable");
    app.add_option("--samples", samples, "Monte Carlo samples");
    app.add_option("--seed", seed, "Monte Carlo seed (default: SWAPSIM_SEED or 42)");
    app.add_option("--out", out_path, "output CSV path (default: stdout)");

    std::string fig_id;
    std::string fig_out;
    CLI::App* fig = app.add_subcommand("fig", "run a figure-reproduction recipe");
    fig->add_option("--id", fig_id, "figure id: 2a 2b 3a 3b 4a 4b 5 6a 6b")->required();
    fig->add_option("--out", fig_out, "output CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (fig->parsed()) {
            SweepConfig cfg = fig_recipe(fig_id);
            cfg.out_path = fig_out;
            emit(run_sweep(cfg), cfg.out_path);
            return 0;
        }

        if (quantity_name.empty()) {
            std::cerr << "swapsim: missing quantity (see --help)\n";
            return 2;
        }
        SweepConfig cfg;
        cfg.quantity = quantity_from_string(quantity_name);
        cfg.channel = channel_from_string(channel_name);
        CurveSpec curve;
        curve.params = ideal ? SystemParams::ideal(delta) : SystemParams::cavity(ratio, delta);
        curve.init = PairInit{theta1, phi1, theta2, phi2};
        cfg.curves = {curve};
        cfg.tau_max = tau_max;
        cfg.tau_step = tau_step;
        if (scheme_name == "q" || scheme_name == "quadrature") {
            cfg.average.scheme = AverageScheme::Quadrature;
        } else if (scheme_name == "mc" || scheme_name == "montecarlo") {
            cfg.average.scheme = AverageScheme::MonteCarlo;
        } else {
            throw std::invalid_argument("unknown scheme '" + scheme_name + "' (use q or mc)");
        }
        cfg.average.nodes = nodes;
        cfg.average.samples = samples;
        cfg.average.seed = seed;
        cfg.out_path = out_path;

        cfg.validate();
        emit(run_sweep(cfg), cfg.out_path);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "swapsim: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "swapsim: " << e.what() << "\n";
        return 1;
    }
}
