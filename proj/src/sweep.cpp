#include "swapsim/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "swapsim/dynamics.hpp"

namespace swapsim {

namespace {

std::vector<double> tau_grid(double tau_max, double tau_step) {
    const long n = static_cast<long>(std::floor(tau_max / tau_step + 1e-9));
    std::vector<double> grid(n + 1);
    for (long k = 0; k <= n; ++k) grid[k] = k * tau_step;
    return grid;
}

std::string column_name(const std::string& base, const std::string& label) {
    return label.empty() ? base : base + "_" + label;
}

void format_number(std::string& out, double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12e", value);
    out += buf;
}

}  // namespace

Quantity quantity_from_string(const std::string& name) {
    if (name == "amplitude") return Quantity::Amplitude;
    if (name == "gamma") return Quantity::Gamma;
    if (name == "entropy-avg") return Quantity::EntropyAvg;
    if (name == "concurrence") return Quantity::Concurrence;
    if (name == "epower") return Quantity::EntanglingPower;
    if (name == "peak-times") return Quantity::PeakTimes;
    throw std::invalid_argument("unknown quantity: " + name);
}

const char* to_string(Quantity q) {
    switch (q) {
        case Quantity::Amplitude: return "amplitude";
        case Quantity::Gamma: return "gamma";
        case Quantity::EntropyAvg: return "entropy-avg";
        case Quantity::Concurrence: return "concurrence";
        case Quantity::EntanglingPower: return "epower";
        case Quantity::PeakTimes: return "peak-times";
    }
    return "?";
}

void SweepConfig::validate() const {
    if (curves.empty()) throw std::invalid_argument("SweepConfig: no curves");
    if (!(tau_step > 0.0)) throw std::invalid_argument("SweepConfig: tau_step must be > 0");
    if (!(tau_max >= tau_step)) throw std::invalid_argument("SweepConfig: tau_max < tau_step");
    for (const CurveSpec& c : curves) {
        c.params.validate();
        c.init.validate();
    }
    average.validate();
    if (quantity == Quantity::PeakTimes && curves.size() != 1) {
        throw std::invalid_argument("SweepConfig: peak-times takes a single parameter set");
    }
}

void TimeSeries::validate() const {
    if (columns.empty()) throw std::invalid_argument("TimeSeries: no columns");
    double prev = -std::numeric_limits<double>::infinity();
    for (const auto& row : rows) {
        if (row.size() != columns.size()) {
            throw std::invalid_argument("TimeSeries: row width does not match header");
        }
        if (!(row.front() > prev)) {
            throw std::invalid_argument("TimeSeries: first column must be strictly increasing");
        }
        prev = row.front();
    }
}

TimeSeries run_sweep(const SweepConfig& config) {
    config.validate();
    TimeSeries series;

    if (config.quantity == Quantity::PeakTimes) {
        const auto& curve = config.curves.front();
        series.columns = {"root", "concurrence"};
        const PairInit excited{};  // theta1 = theta2 = 0
        for (double root : maximal_entanglement_times(curve.params, config.tau_max)) {
            series.rows.push_back({root, concurrence_phi_plus(curve.params, excited, root)});
        }
        series.validate();
        return series;
    }

    series.columns.push_back("tau");
    for (const CurveSpec& curve : config.curves) {
        switch (config.quantity) {
            case Quantity::Amplitude:
                series.columns.push_back(column_name("E_re", curve.label));
                series.columns.push_back(column_name("E_im", curve.label));
                series.columns.push_back(column_name("E_abs", curve.label));
                break;
            case Quantity::Gamma:
                series.columns.push_back(column_name("Gamma_re", curve.label));
                series.columns.push_back(column_name("Gamma_im", curve.label));
                series.columns.push_back(column_name("Gamma_abs", curve.label));
                break;
            case Quantity::EntropyAvg:
                series.columns.push_back(column_name("S_avg", curve.label));
                break;
            case Quantity::Concurrence:
                series.columns.push_back(column_name("concurrence", curve.label));
                break;
            case Quantity::EntanglingPower:
                series.columns.push_back(column_name("epower", curve.label));
                break;
            case Quantity::PeakTimes:
                break;
        }
    }

    for (double tau : tau_grid(config.tau_max, config.tau_step)) {
        std::vector<double> row{tau};
        for (const CurveSpec& curve : config.curves) {
            switch (config.quantity) {
                case Quantity::Amplitude: {
                    const Complex e = survival_amplitude(curve.params, tau);
                    row.push_back(e.real());
                    row.push_back(e.imag());
                    row.push_back(std::abs(e));
                    break;
                }
                case Quantity::Gamma: {
                    const Complex g = gamma_amplitude(curve.params, tau);
                    row.push_back(g.real());
                    row.push_back(g.imag());
                    row.push_back(std::abs(g));
                    break;
                }
                case Quantity::EntropyAvg:
                    row.push_back(average_linear_entropy(curve.params, tau, config.average));
                    break;
                case Quantity::Concurrence:
                    row.push_back(
                        channel_concurrence(config.channel, curve.params, curve.init, tau));
                    break;
                case Quantity::EntanglingPower:
                    row.push_back(
                        entangling_power(config.channel, curve.params, tau, config.average));
                    break;
                case Quantity::PeakTimes:
                    break;
            }
        }
        series.rows.push_back(std::move(row));
    }
    series.validate();
    return series;
}

SweepConfig fig_recipe(const std::string& id) {
    const double half_pi = std::numbers::pi / 2.0;
    const PairInit excited{};
    const PairInit superposed{half_pi, 0.0, half_pi, 0.0};
    SweepConfig cfg;

    const auto detuning_pair = [&](Quantity q, double ratio, double d1, const char* l1, double d2,
                                   const char* l2, double tau_max, double tau_step) {
        cfg.quantity = q;
        cfg.curves = {{SystemParams::cavity(ratio, d1), excited, l1},
                      {SystemParams::cavity(ratio, d2), excited, l2}};
        cfg.tau_max = tau_max;
        cfg.tau_step = tau_step;
    };
    const auto init_pair = [&](double ratio, double delta, double tau_max, double tau_step) {
        cfg.quantity = Quantity::Concurrence;
        cfg.channel = BellChannel::PhiPlus;
        cfg.curves = {{SystemParams::cavity(ratio, delta), excited, "t0"},
                      {SystemParams::cavity(ratio, delta), superposed, "tpi2"}};
        cfg.tau_max = tau_max;
        cfg.tau_step = tau_step;
    };

    if (id == "2a") {
        detuning_pair(Quantity::EntropyAvg, 10.0, 0.0, "d0", 15.0, "d15", 3.0, 2e-3);
    } else if (id == "2b") {
        detuning_pair(Quantity::EntropyAvg, 0.1, 0.0, "d0", 1.5, "d1p5", 500.0, 0.25);
    } else if (id == "3a") {
        detuning_pair(Quantity::EntanglingPower, 10.0, 0.0, "d0", 15.0, "d15", 3.0, 5e-3);
        cfg.channel = BellChannel::PsiMinus;
    } else if (id == "3b") {
        detuning_pair(Quantity::EntanglingPower, 0.1, 0.0, "d0", 1.5, "d1p5", 300.0, 0.5);
        cfg.channel = BellChannel::PsiMinus;
    } else if (id == "4a") {
        init_pair(10.0, 0.0, 1.5, 1e-3);
    } else if (id == "4b") {
        init_pair(10.0, 15.0, 5.0, 2e-3);
    } else if (id == "5") {
        init_pair(0.1, 0.0, 20.0, 0.01);
    } else if (id == "6a") {
        detuning_pair(Quantity::EntanglingPower, 10.0, 0.0, "d0", 15.0, "d15", 3.0, 5e-3);
        cfg.channel = BellChannel::PhiPlus;
    } else if (id == "6b") {
        detuning_pair(Quantity::EntanglingPower, 0.1, 0.0, "d0", 1.5, "d1p5", 300.0, 0.5);
        cfg.channel = BellChannel::PhiPlus;
    } else {
        throw std::invalid_argument("fig_recipe: unknown figure id '" + id + "'");
    }
    return cfg;
}

std::string emit_csv(const TimeSeries& series) {
    series.validate();
    std::string out;
    for (std::size_t i = 0; i < series.columns.size(); ++i) {
        if (i) out += ',';
        out += series.columns[i];
    }
    out += '\n';
    for (const auto& row : series.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            format_number(out, row[i]);
        }
        out += '\n';
    }
    return out;
}

TimeSeries parse_csv(const std::string& text) {
    TimeSeries series;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("parse_csv: empty input");
    std::istringstream header(line);
    std::string field;
    while (std::getline(header, field, ',')) series.columns.push_back(field);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream cells(line);
        while (std::getline(cells, field, ',')) {
            std::size_t used = 0;
            row.push_back(std::stod(field, &used));
            if (used != field.size()) throw std::invalid_argument("parse_csv: bad number " + field);
        }
        series.rows.push_back(std::move(row));
    }
    series.validate();
    return series;
}

void write_csv(const TimeSeries& series, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    out << emit_csv(series);
    if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

}  // namespace swapsim
