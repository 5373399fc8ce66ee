// Closed-form single-cavity amplitude dynamics: survival amplitude E(t),
// leaked-photon overlap Gamma(t), Lorentzian spectral density and its
// exponential correlation kernel, and the long-time concurrence limit.

#pragma once

#include "swapsim/system.hpp"

namespace swapsim {

// E(t) = e^{-(i delta + kappa) t/2} (cosh(Omega t/2)
//        + ((i delta + kappa)/Omega) sinh(Omega t/2)).
// Switches to a series branch for |Omega| t < 1e-6 to avoid 0/0.
Complex survival_amplitude(const SystemParams& params, double t);

// Gamma(t) = -2i e^{-(i delta + kappa) t/2} (g/Omega) sinh(Omega t/2),
// the pulse-matched overlap of the leaked photon (pulse shape = alpha).
Complex gamma_amplitude(const SystemParams& params, double t);

// J(offset) = (1/pi) g^2 kappa / (offset^2 + kappa^2), offset relative to
// the cavity frequency. Rejects the ideal cavity (point-mass density).
double spectral_density(const SystemParams& params, double omega_offset);

// f(s) = g^2 e^{-kappa s} e^{-i delta s} for s >= 0.
Complex correlation_kernel(const SystemParams& params, double s);

// t -> infinity limit of the Phi+ concurrence for |e,e> initial qubits:
// 2 r^2/(1 + r^4) with r = |2g/(Omega + i delta + kappa)|, valid when the
// dominant decay mode is strictly non-degenerate (Re Omega > 0).
double stationary_concurrence_limit(const SystemParams& params);

}  // namespace swapsim
