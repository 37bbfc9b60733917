#pragma once

#include "tripod/params.hpp"

namespace tripod {

// rho_11 ~ rho_33 ~ 1/2 under a strong pump with balanced weak beams; the
// population factor carried by every lineshape core below.
inline constexpr Real kPopulationSymmetric = 0.5;

struct Susceptibilities {
  Complex chi1_p, chi1_t;   // dimensionless
  Complex chi3_p, chi3_t;   // m^2/V^2 when combined with |E|^2 = hbar^2 |Om|^2 / |mu|^2
  Complex core1_p, core1_t; // prefactor-stripped lineshapes, gamma units
  Complex core3_p, core3_t;
  Convention convention;
};

// Linear lineshape core, gamma units, population factor included:
//   core1 = 1/2 * X / (|Om|^2 - d_b0 * X),  X = (delta_beam - delta_pump) + i gamma_d.
// This is the exact weak-field limit of the master-equation steady state; it
// has Autler-Townes poles at |Om|^2 = Re(d_b0 X) and vanishes on two-photon
// resonance at zero dephasing.
Complex chi1_core(Beam beam, const AtomParams& atom, const FieldParams& fields);

// Cross-Kerr lineshape core, gamma units:
//   core3 = -1/2 * (X_s / Y) * (1/D_s) * [ X_s / D_s - conj(X_o) / conj(D_o) ]
// with D = |Om|^2 - d_b0 X per beam and Y the beam-beam ground coherence
// variable (delta_self - delta_other) + i gamma_d. Captures the two-photon
// coherence pathway between the weak beams.
Complex chi3_core(Beam beam, const AtomParams& atom, const FieldParams& fields);

Complex chi1(Beam beam, const AtomParams& atom, const FieldParams& fields,
             const MediumParams& medium, Convention conv);
Complex chi3(Beam beam, const AtomParams& atom, const FieldParams& fields,
             const MediumParams& medium, Convention conv);

Susceptibilities susceptibilities(const AtomParams& atom, const FieldParams& fields,
                                  const MediumParams& medium, Convention conv);

// Verbatim transcription of the published lineshapes, kept as diagnostics.
// In the EIT regime the probe forms agree with the realized ones to a few
// percent; the published trigger forms come out as the exact negative of the
// physical response (negative absorption), which is why the realized module
// uses the forms above. See README for the comparison.
Complex chi1_core_published(Beam beam, const AtomParams& atom, const FieldParams& fields);
Complex chi3_core_published(Beam beam, const AtomParams& atom, const FieldParams& fields);

// Intensity attenuation exponent alpha with I(l) = I(0) exp(-alpha):
// alpha = 2 k l * phase_multiplier(conv) * Im chi.
Real absorption_exponent(Complex chi, Real k, Real length, Convention conv);

}  // namespace tripod
