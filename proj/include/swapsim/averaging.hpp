// Input-independent quantities: Haar-averaged linear entropy and the
// entangling power of each Bell-measurement channel.

#pragma once

#include <cstdint>

#include "swapsim/swap_protocol.hpp"
#include "swapsim/system.hpp"

namespace swapsim {

enum class AverageScheme { Quadrature, MonteCarlo };

struct AverageSpec {
    AverageScheme scheme = AverageScheme::Quadrature;
    int nodes = 32;              // Gauss-Legendre nodes per x variable; 2x that in each angle
    long samples = 200000;       // Monte Carlo samples
    std::uint64_t seed = 42;     // Monte Carlo seed

    void validate() const;
};

// Haar average of the single-qubit linear entropy. Equals the closed form
// (2/3) eps (1 - eps) with eps = |E(t)|^2; the quadrature/Monte-Carlo routes
// evaluate the average directly.
double average_linear_entropy(const SystemParams& params, double t, const AverageSpec& spec);

// Fast path: (2/3) eps (1 - eps).
double average_linear_entropy_closed(const SystemParams& params, double t);

// Haar average of the swapped concurrence over both qubits' Bloch spheres.
double entangling_power(BellChannel channel, const SystemParams& params, double t,
                        const AverageSpec& spec);

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

// Monte Carlo estimate with its standard error (sample sd / sqrt(n)),
// deterministic for a fixed seed, fixed-order accumulation.
MonteCarloEstimate entangling_power_mc(BellChannel channel, const SystemParams& params,
                                       double t, long samples, std::uint64_t seed);

}  // namespace swapsim
