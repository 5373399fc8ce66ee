// Bell-state measurement on the leaked fields: conditional two-qubit states
// and the closed-form swapped concurrences.

#pragma once

#include <vector>

#include "swapsim/qubit_algebra.hpp"
#include "swapsim/system.hpp"

namespace swapsim {

struct PairInit {
    double theta1 = 0.0, phi1 = 0.0;
    double theta2 = 0.0, phi2 = 0.0;

    void validate() const;
    QubitInit qubit1() const { return {theta1, phi1}; }
    QubitInit qubit2() const { return {theta2, phi2}; }
};

enum class BellChannel { PsiMinus, PsiPlus, PhiPlus, PhiMinus };

const char* to_string(BellChannel channel);

// Conditional (renormalized) qubit pair state after projecting the leaked
// fields onto the chosen Bell state. The common photon-overlap factor of the
// Psi channels is cancelled analytically, so tau = 0 returns the tau -> 0+
// limit. Throws std::domain_error on zero-probability outcomes.
PureTwoQubitState post_bsm_state(BellChannel channel, const SystemParams& params,
                                 const PairInit& init, double t);

// E = T1/(T1 + T2), T1 = 2 cos^2(t1/2) cos^2(t2/2) |E(t)|^2,
// T2 = (1 - cos t1 cos t2 - sin t1 sin t2 cos(p1 - p2))/2.
double concurrence_psi_minus(const SystemParams& params, const PairInit& init, double t);

// E = T/N+, T = 2 cos^2(t1/2) cos^2(t2/2) |E|^2 |Gamma|^2, N+ the squared
// norm of the conditional state (cross term + 0.5 sin t1 sin t2
// Re(e^{-i(p1+p2)} Gamma^2), consistent with the constructed state).
double concurrence_phi_plus(const SystemParams& params, const PairInit& init, double t);

// Concurrence of the post-BSM state for any channel; the Psi-/Phi+ channels
// use the closed forms above, the signed variants go through the constructed
// state.
double channel_concurrence(BellChannel channel, const SystemParams& params,
                           const PairInit& init, double t);

// All roots of |E(tau)| = |Gamma(tau)| in (0, tau_max], located by a
// 1e-3-step sign scan plus bisection to 1e-10. At each root the Phi+
// concurrence for |e,e> initial qubits is maximal. Weak coupling yields an
// empty list.
std::vector<double> maximal_entanglement_times(const SystemParams& params, double tau_max);

}  // namespace swapsim
