#pragma once

#include "tripod/propagation.hpp"

namespace tripod {

// Multimode coherent-state input. |alpha|^2 / delta_omega enters the output
// expectation values only as a single group (a spectral photon density); the
// field-mode normalization behind it is documented in the README.
struct CoherentInput {
  Complex alpha_p{0, 0};
  Complex alpha_t{0, 0};
  Real delta_omega = 0.0;  // rad/s

  void validate() const;
};

struct QuantumPhaseResult {
  Real phi_p = 0.0, phi_t = 0.0;          // radians
  Complex mean_e_p, mean_e_t;             // post-propagation expectations
  Real damping_p = 0.0, damping_t = 0.0;  // attenuation exponents, >= 0
};

// Quantum cross-phase shifts Phi = c * Re(eta) * delta_omega; the imaginary
// part of eta is returned as a nonlinear absorption rate.
struct QuantumPhases {
  Real phi_p, phi_t;
  Real absorption_p, absorption_t;
};
QuantumPhases quantum_phase(const AtomParams& atom, const FieldParams& fields,
                            const MediumParams& medium, Real delta_omega);

// Coherent-state expectation values after propagation:
//   <E_p> = alpha_p exp{ [ -2 sin^2(Phi_p/2) + i sin Phi_p ] |alpha_t|^2 / delta_omega }
// and symmetrically for the trigger.
QuantumPhaseResult coherent_expectation(const CoherentInput& in, Real phi_p, Real phi_t);

}  // namespace tripod
