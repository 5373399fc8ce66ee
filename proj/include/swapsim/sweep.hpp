// Parameter sweeps over the scaled-time grid, figure-reproduction recipes,
// and CSV emission.

#pragma once

#include <string>
#include <vector>

#include "swapsim/averaging.hpp"
#include "swapsim/swap_protocol.hpp"
#include "swapsim/system.hpp"

namespace swapsim {

enum class Quantity { Amplitude, Gamma, EntropyAvg, Concurrence, EntanglingPower, PeakTimes };

Quantity quantity_from_string(const std::string& name);  // throws on unknown name
const char* to_string(Quantity q);

// One curve of a sweep; figure recipes bundle several curves on a shared grid.
struct CurveSpec {
    SystemParams params;
    PairInit init;        // used by concurrence
    std::string label;    // column suffix; empty for single-curve sweeps
};

struct SweepConfig {
    Quantity quantity = Quantity::Amplitude;
    BellChannel channel = BellChannel::PsiMinus;
    std::vector<CurveSpec> curves;
    double tau_max = 2.0;
    double tau_step = 0.01;
    AverageSpec average;
    std::string out_path;  // empty: stdout

    void validate() const;
};

// Column-oriented time series; columns.front() is "tau" (or "root" for peak
// times) and rows are strictly increasing in the first entry.
struct TimeSeries {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    bool operator==(const TimeSeries&) const = default;
    void validate() const;
};

TimeSeries run_sweep(const SweepConfig& config);

// Exact parameter sets of the cited figures: ids 2a, 2b, 3a, 3b, 4a, 4b, 5,
// 6a, 6b. Throws std::invalid_argument on unknown ids.
SweepConfig fig_recipe(const std::string& id);

// UTF-8 CSV, header row, %.12e numbers, LF line endings.
std::string emit_csv(const TimeSeries& series);
TimeSeries parse_csv(const std::string& text);
void write_csv(const TimeSeries& series, const std::string& path);

}  // namespace swapsim
