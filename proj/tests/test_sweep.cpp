#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>

#include "swapsim/sweep.hpp"

using namespace swapsim;
using doctest::Approx;

namespace {

SweepConfig basic_config(Quantity q) {
    SweepConfig cfg;
    cfg.quantity = q;
    cfg.curves = {{SystemParams::cavity(10.0, 0.0), PairInit{}, ""}};
    cfg.tau_max = 0.5;
    cfg.tau_step = 0.01;
    return cfg;
}

}  // namespace

TEST_CASE("quantity names round-trip") {
    for (auto q : {Quantity::Amplitude, Quantity::Gamma, Quantity::EntropyAvg,
                   Quantity::Concurrence, Quantity::EntanglingPower, Quantity::PeakTimes}) {
        CHECK(quantity_from_string(to_string(q)) == q);
    }
    CHECK_THROWS_AS(quantity_from_string("nope"), std::invalid_argument);
}

TEST_CASE("config validation") {
    SweepConfig empty;
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
    auto cfg = basic_config(Quantity::Amplitude);
    cfg.tau_step = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = basic_config(Quantity::Amplitude);
    cfg.tau_max = 0.001;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = basic_config(Quantity::PeakTimes);
    cfg.curves.push_back(cfg.curves.front());
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("time series validation") {
    TimeSeries ragged{{"tau", "y"}, {{0.0, 1.0}, {0.1}}};
    CHECK_THROWS_AS(ragged.validate(), std::invalid_argument);
    TimeSeries non_increasing{{"tau", "y"}, {{0.0, 1.0}, {0.0, 2.0}}};
    CHECK_THROWS_AS(non_increasing.validate(), std::invalid_argument);
    TimeSeries ok{{"tau", "y"}, {{0.0, 1.0}, {0.1, 2.0}}};
    CHECK_NOTHROW(ok.validate());
}

TEST_CASE("ideal-cavity amplitude sweep gives |cos(g t)|") {
    SweepConfig cfg;
    cfg.quantity = Quantity::Amplitude;
    cfg.curves = {{SystemParams::ideal(), PairInit{}, ""}};
    cfg.tau_max = 3.0;
    cfg.tau_step = 0.05;
    const auto series = run_sweep(cfg);
    REQUIRE(series.columns == std::vector<std::string>{"tau", "E_re", "E_im", "E_abs"});
    for (const auto& row : series.rows) {
        CHECK(row[3] == Approx(std::abs(std::cos(row[0]))).epsilon(1e-12));
    }
}

TEST_CASE("peak-times sweep emits increasing roots with unit concurrence") {
    auto cfg = basic_config(Quantity::PeakTimes);
    cfg.tau_max = 1.0;
    const auto series = run_sweep(cfg);
    REQUIRE(series.columns == std::vector<std::string>{"root", "concurrence"});
    REQUIRE(!series.rows.empty());
    for (const auto& row : series.rows) {
        CHECK(row[1] >= 1.0 - 1e-9);
    }
}

TEST_CASE("csv emit/parse is a fixpoint and preserves parsed values exactly") {
    auto cfg = basic_config(Quantity::Gamma);
    const auto series = run_sweep(cfg);
    const std::string text = emit_csv(series);
    CHECK(text.find("\r") == std::string::npos);  // LF endings only
    const TimeSeries parsed = parse_csv(text);
    CHECK(emit_csv(parsed) == text);
    CHECK(parse_csv(emit_csv(parsed)) == parsed);
    CHECK(parsed.columns == series.columns);
    CHECK(parsed.rows.size() == series.rows.size());
}

TEST_CASE("monte carlo sweeps are reproducible byte for byte") {
    auto cfg = basic_config(Quantity::EntanglingPower);
    cfg.channel = BellChannel::PsiMinus;
    cfg.tau_max = 0.1;
    cfg.tau_step = 0.02;
    cfg.average.scheme = AverageScheme::MonteCarlo;
    cfg.average.samples = 20000;
    cfg.average.seed = 42;
    const std::string a = emit_csv(run_sweep(cfg));
    const std::string b = emit_csv(run_sweep(cfg));
    CHECK(a == b);
}

TEST_CASE("figure recipes carry the cited parameter sets") {
    const auto f4b = fig_recipe("4b");
    CHECK(f4b.quantity == Quantity::Concurrence);
    CHECK(f4b.channel == BellChannel::PhiPlus);
    REQUIRE(f4b.curves.size() == 2);
    CHECK(f4b.curves[0].params.g == Approx(10.0));
    CHECK(f4b.curves[0].params.delta == Approx(15.0));
    CHECK(f4b.curves[0].init.theta1 == 0.0);
    CHECK(f4b.curves[1].init.theta1 == Approx(std::numbers::pi / 2.0));
    CHECK(f4b.curves[1].init.phi1 == 0.0);

    const auto f2b = fig_recipe("2b");
    CHECK(f2b.quantity == Quantity::EntropyAvg);
    REQUIRE(f2b.curves.size() == 2);
    CHECK(f2b.curves[0].params.g == Approx(0.1));
    CHECK(f2b.curves[0].params.delta == Approx(0.0));
    CHECK(f2b.curves[1].params.delta == Approx(1.5));

    const auto f3a = fig_recipe("3a");
    CHECK(f3a.quantity == Quantity::EntanglingPower);
    CHECK(f3a.channel == BellChannel::PsiMinus);
    const auto f6a = fig_recipe("6a");
    CHECK(f6a.channel == BellChannel::PhiPlus);

    CHECK_THROWS_AS(fig_recipe("7"), std::invalid_argument);
    CHECK_THROWS_AS(fig_recipe(""), std::invalid_argument);
}

TEST_CASE("strong-coupling concurrence figure oscillates between zero and one") {
    const auto series = run_sweep(fig_recipe("4a"));
    REQUIRE(series.columns[1] == "concurrence_t0");
    double lo = 1.0, hi = 0.0;
    for (const auto& row : series.rows) {
        lo = std::min(lo, row[1]);
        hi = std::max(hi, row[1]);
    }
    CHECK(lo < 1e-3);
    CHECK(hi > 0.999);
}

TEST_CASE("every figure recipe runs to completion in under ten seconds") {
    for (const char* id : {"2a", "2b", "3a", "3b", "4a", "4b", "5", "6a", "6b"}) {
        CAPTURE(id);
        const auto start = std::chrono::steady_clock::now();
        const auto series = run_sweep(fig_recipe(id));
        const auto elapsed = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start);
        CHECK(!series.rows.empty());
        CHECK(elapsed.count() < 10.0);
    }
}
