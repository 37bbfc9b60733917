#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tripod/propagation.hpp"

namespace tripod {

// Accumulated single-pass phases (radians, unwrapped; phi0 = k l ~ 1e5).
struct PhaseShifts {
  Real phi0_p = 0, phi0_t = 0;
  Real phi_lin_p = 0, phi_lin_t = 0;    // k l (1 + mult * Re chi1)
  Real phi_nlin_p = 0, phi_nlin_t = 0;  // Gaussian-pulse XPM phases
  Convention convention = Convention::GAUSSIAN;
};

PhaseShifts phase_shifts(const AtomParams& atom, const FieldParams& fields,
                         const MediumParams& medium, const PulseSpec& pulse_p,
                         const PulseSpec& pulse_t, Convention conv);

struct GateEntry {
  Real total = 0;      // phase in e^{-i total}
  Real vacuum = 0;     // k_p l + k_t l
  Real linear = 0;     // chi^(1) parts
  Real nonlinear = 0;  // XPM parts
};

// Four-entry polarization truth table keyed (pol_p, pol_t); sigma+ couples
// the probe, sigma- couples the trigger.
struct GateTruthTable {
  GateEntry mm;  // (sigma-, sigma-)
  GateEntry mp;  // (sigma-, sigma+): vacuum only
  GateEntry pp;  // (sigma+, sigma+)
  GateEntry pm;  // (sigma+, sigma-): the only entry with nonlinear parts
  PhaseShifts shifts;
};

GateTruthTable truth_table(const AtomParams& atom, const FieldParams& fields,
                           const MediumParams& medium, const PulseSpec& pulse_p,
                           const PulseSpec& pulse_t, Convention conv);

// phi = (phi_+^P + phi_-^T) - phi_lin^P - phi_lin^T; vacuum and linear parts
// cancel, leaving the summed nonlinear shifts.
Real conditional_phase(const GateTruthTable& table);

// Scaled probe absorption at the transparency-window center against the
// dephasing rate; ordinates normalized to the scan maximum.
std::vector<std::pair<Real, Real>> absorption_scan(Real gamma_d_max, int points,
                                                   const AtomParams& atom,
                                                   const FieldParams& fields,
                                                   const MediumParams& medium);

struct NoiseModel {
  Real level = 0.01;       // relative std of the intensity multipliers
  int samples = 10000;
  std::uint64_t seed = 0;
  bool fluctuate_probe = true;
  bool fluctuate_trigger = true;
  bool fluctuate_pump = true;

  void validate() const;
};

struct McResult {
  Real conditional_noiseless = 0;
  Real mean_error = 0;               // 1 - cos^2(dphi/2), conditional-phase fidelity loss
  Real sem = 0;                      // standard error of mean_error
  Real mean_error_uncorrected = 0;   // four-entry fidelity without local-phase correction
  Real dphi_std = 0;
  std::array<Real, 5> dphi_quantiles{};  // 5, 25, 50, 75, 95 %
  int failed_samples = 0;            // pole/degeneracy draws, excluded from means
  std::vector<Real> dphi;            // per-sample conditional-phase deviations
};

// Monte Carlo gate error under Gaussian intensity fluctuations (1 + eps on
// |Om_P|^2, |Om_T|^2, |Om|^2 independently), all phases recomputed per sample.
// Draws are counter-based on (seed, sample), so results are reproducible and
// order-independent.
McResult gate_error_mc(const NoiseModel& noise, const AtomParams& atom,
                       const FieldParams& fields, const MediumParams& medium,
                       const PulseSpec& pulse_p, const PulseSpec& pulse_t, Convention conv);

// Three N(0,1) draws determined by (seed, counter) alone.
std::array<Real, 3> gaussian_triplet(std::uint64_t seed, std::uint64_t counter);

}  // namespace tripod
