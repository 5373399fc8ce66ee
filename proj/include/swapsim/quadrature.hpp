// Small quadrature and sampling utilities shared by the averaging module and
// the brute-force oracle suite.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace swapsim {

struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;
};

// Nodes and weights on [0, 1], computed by Newton iteration on the Legendre
// polynomial. n >= 1.
GaussLegendre gauss_legendre01(int n);

// Adaptive Simpson for complex-valued integrands on [a, b]; abs_tol bounds
// the absolute error estimate.
std::complex<double> adaptive_simpson(const std::function<std::complex<double>(double)>& f,
                                      double a, double b, double abs_tol);

// Bloch angles of a two-qubit product state drawn from the Haar factorization
// x = cos^2(theta/2) uniform on [0,1], phi uniform on [0, 2 pi).
struct HaarPoint {
    double theta1, phi1, theta2, phi2;
};

// Deterministic sample stream: per sample the draw order is x1, phi1, x2,
// phi2, each from the same 53-bit uniform generator.
class HaarSampler {
public:
    explicit HaarSampler(std::uint64_t seed) : rng_(seed) {}

    HaarPoint next();

private:
    double uniform01();
    std::mt19937_64 rng_;
};

}  // namespace swapsim
