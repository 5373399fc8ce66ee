// One- and two-qubit state containers, linear entropy, and Wootters
// concurrence (general 4x4 route and the pure-state shortcut).

#pragma once

#include <array>

#include "swapsim/system.hpp"

namespace swapsim {

// Bloch angles of the initial qubit state cos(theta/2)|e> + sin(theta/2)e^{i phi}|g>.
struct QubitInit {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2 pi)

    void validate() const;
    Complex excited_amp() const;  // cos(theta/2)
    Complex ground_amp() const;   // sin(theta/2) e^{i phi}
};

// Basis order everywhere: |ee>, |eg>, |ge>, |gg>.
struct PureTwoQubitState {
    Complex ee, eg, ge, gg;

    double norm_sq() const;
    // Throws if the squared norm deviates from 1 beyond 1e-12.
    void validate() const;
    static PureTwoQubitState normalized(Complex ee, Complex eg, Complex ge, Complex gg);
};

struct DensityMatrix2 {
    std::array<Complex, 4> m{};  // row-major

    Complex& at(int i, int j) { return m[2 * i + j]; }
    const Complex& at(int i, int j) const { return m[2 * i + j]; }
    Complex trace() const { return m[0] + m[3]; }

    // Validating factory: Hermitian and unit trace within 1e-12, eigenvalues
    // >= -1e-12.
    static DensityMatrix2 density(const std::array<Complex, 4>& entries);
};

struct DensityMatrix4 {
    std::array<Complex, 16> m{};  // row-major

    Complex& at(int i, int j) { return m[4 * i + j]; }
    const Complex& at(int i, int j) const { return m[4 * i + j]; }
    Complex trace() const { return m[0] + m[5] + m[10] + m[15]; }

    static DensityMatrix4 density(const std::array<Complex, 16>& entries);
    static DensityMatrix4 projector(const PureTwoQubitState& s);
};

// Qubit state after tracing out the field: entries |C|^2, C D*, D C*,
// 1 - |C|^2 with C(t) = cos(theta/2) E(t) and D constant.
DensityMatrix2 qubit_reduced_density(const SystemParams& params, const QubitInit& init,
                                     double t);

// S = 1 - Tr(rho^2), in [0, 1/2] for a qubit.
double linear_entropy(const DensityMatrix2& rho);

// 2 |ee*gg - eg*ge| for a normalized pure state.
double concurrence_pure(const PureTwoQubitState& s);

// General Wootters concurrence: eigenvalues of rho * (YY rho* YY) via the
// characteristic quartic, max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)}.
double concurrence_wootters(const DensityMatrix4& rho);

namespace detail {

// Eigenvalues of a 4x4 complex matrix with (theoretically) real spectrum,
// sorted descending. Characteristic polynomial by Faddeev-LeVerrier, closed
// form roots, guarded Newton polish, noise-floor handling for zero clusters.
// Throws std::runtime_error when an eigenvalue keeps an imaginary or negative
// part beyond 1e-8 * scale.
std::array<double, 4> real_eigenvalues4(const std::array<Complex, 16>& matrix);

// (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y) in the fixed basis order.
std::array<Complex, 16> spin_flipped(const std::array<Complex, 16>& rho);

}  // namespace detail

}  // namespace swapsim
