#pragma once

#include "tripod/types.hpp"

namespace tripod {

enum class Polarization { SigmaPlus, SigmaMinus };
enum class Beam { Probe, Trigger };

// Unit system for dimensionful outputs. Internally every frequency is in
// units of the optical coherence decay rate gamma. The SI convention uses the
// N |mu|^2 / (hbar eps0) susceptibility prefactor and phase rule k l chi / 2;
// the Gaussian convention keeps the same chi number (the 4 pi N |mu|^2 cgs
// prefactor evaluates to the identical value) but applies the refractive rule
// n = 1 + 2 pi chi, so every chi-derived phase scales by 4 pi.
enum class Convention { SI, GAUSSIAN };

// Detunings and decay rates of the four-level atom. Frequencies are in units
// of gamma (the optical coherence decay, == 1 internally); gamma_si is the
// bridge to rad/s.
struct AtomParams {
  Real delta1 = 0.0;
  Real delta2 = 0.0;
  Real delta3 = 0.0;
  Real gamma_d = 0.0;                              // ground dephasing, gamma units
  Real gamma_si = 2.0 * constants::pi * 6.07e6;    // rad/s

  void validate() const;
};

// Rabi frequencies (gamma units, nonnegative magnitudes) and the fixed
// polarization assignment: sigma+ drives the probe transition |1>-|0>,
// sigma- the trigger transition |3>-|0>.
struct FieldParams {
  Real omega_p = 0.0;
  Real omega_t = 0.0;
  Real omega_pump = 0.0;
  Polarization pol_p = Polarization::SigmaPlus;
  Polarization pol_t = Polarization::SigmaMinus;

  void validate() const;
};

struct MediumParams {
  Real density;    // atoms per m^3
  Real length;     // m
  Real lambda_p;   // m
  Real lambda_t;   // m
  Real dipole_p;   // C m
  Real dipole_t;   // C m
  Real g_p;        // quantized-field coupling, rad/s
  Real g_t;        // rad/s
  Real n_atoms;    // atom number inside the mode volume

  Real k_p() const { return 2.0 * constants::pi / lambda_p; }
  Real k_t() const { return 2.0 * constants::pi / lambda_t; }

  void validate() const;
};

// The six complex detunings, gamma units:
//   d_{j0} = delta_j + i gamma
//   d_{kj} = delta_j - delta_k - i gamma_d   (k, j in {1,2,3})
// plus the conjugate combinations the steady-state response is built from.
struct ComplexDetunings {
  Complex d10, d20, d30;
  Complex d12, d13, d23;

  // (delta_beam - delta_pump) + i gamma_d: the two-photon pole variable of
  // each beam's EIT lineshape.
  Complex probe_two_photon() const { return -d12; }
  Complex trigger_two_photon() const { return std::conj(d23); }
  // (delta_self - delta_other) + i gamma_d: beam-beam ground coherence.
  Complex probe_trigger_ground() const { return -d13; }
  Complex trigger_probe_ground() const { return std::conj(d13); }
};

ComplexDetunings complex_detunings(const AtomParams& atom);

// gamma-unit <-> SI conversions. Pure scalings; to_si o from_si == identity.
inline Real to_si_angular(Real value_gamma, Real gamma_si) { return value_gamma * gamma_si; }
inline Real from_si_angular(Real value_si, Real gamma_si) { return value_si / gamma_si; }
inline Real to_si_time(Real value_gamma, Real gamma_si) { return value_gamma / gamma_si; }
inline Real from_si_time(Real value_si, Real gamma_si) { return value_si * gamma_si; }

// Susceptibility prefactor N |mu|^2 / (hbar eps0 gamma_si) for one beam,
// dimensionless against gamma-unit lineshape cores.
Real chi_prefactor(Beam beam, const AtomParams& atom, const MediumParams& medium);

// Phase rule multiplier applied to the (SI-form) chi value:
// SI: n - 1 = chi / 2; GAUSSIAN: n - 1 = 2 pi chi.
Real phase_multiplier(Convention conv);

const char* to_string(Convention conv);
const char* to_string(Polarization pol);

}  // namespace tripod
