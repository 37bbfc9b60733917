#pragma once

#include <vector>

#include "tripod/params.hpp"

namespace tripod {

struct PropagationCoeffs {
  Complex ng_p, ng_t;       // group indices
  Real vg_p = 0, vg_t = 0;  // m/s, from Re ng
  Real dwtr_p = 0, dwtr_t = 0;  // transparency windows, rad/s
  Complex beta_p, beta_t;   // dispersion, s^2/m
  Complex kappa_p, kappa_t; // loss, 1/m
  Complex eta_p, eta_t;     // anharmonic XPM coefficients, s/m (quantized envelopes)
  bool anomalous_p = false, anomalous_t = false;  // Re ng < 0
};

// Slow-light coefficients of both beams. Group index
//   ng = 1/2 g^2 N / (|Om|^2 - d_b0 X),  X = (delta_beam - delta_pump) + i gamma_d,
// shares its denominator with the chi^(1) lineshape and is positive across the
// EIT window; vg = c / (1 + Re ng). A negative Re ng is flagged as anomalous
// dispersion, not an error.
PropagationCoeffs coefficients(const AtomParams& atom, const FieldParams& fields,
                               const MediumParams& medium);

// Transparency window sqrt(c |Om|^2 / (gamma_beam l ng)); the decay rate is a
// per-beam argument (gamma_10 for the probe, gamma_30 for the trigger; equal
// in this model).
Real transparency_window(Real omega_pump_si, Real gamma_beam_si, Real length, Real ng_re);

// Group-velocity walk-off parameter:
//   zeta = (1 - vg_self / vg_other) * sqrt(2) * l / (vg_self * tau_other).
Real zeta(Real length, Real vg_self, Real vg_other, Real tau_other);

// erf(z)/z with the removable singularity evaluated by series for |z| < 1e-4.
Real erf_factor(Real z);

struct PulseSpec {
  Real peak_rabi = 0.0;  // gamma units
  Real tau = 0.0;        // s
  Beam beam = Beam::Probe;

  void validate() const;
};

// Gaussian-pulse nonlinear phase shift of one beam (radians):
//   phi_nlin = k l (pi^{3/2}/4) (erf(zeta)/zeta) * Re chi3 * |E_other|^2
// evaluated through the gamma-unit prefactor chain; GAUSSIAN scales by 4 pi.
Real nonlinear_phase(Beam beam, const AtomParams& atom, const FieldParams& fields,
                     const MediumParams& medium, const PulseSpec& pulse_p,
                     const PulseSpec& pulse_t, Convention conv);

// Per-length rates for the coupled envelope equations in the frame retarded
// with the probe. xpm_* are phase rates per |E_other|^2 per meter; `walkoff`
// is 1/vg_t - 1/vg_p.
struct StepRates {
  Complex kappa_p{0, 0}, kappa_t{0, 0};  // 1/m
  Complex beta_p{0, 0}, beta_t{0, 0};    // s^2/m
  Complex xpm_p{0, 0}, xpm_t{0, 0};      // rad/m per |E_other|^2
  Real walkoff = 0.0;                    // s/m
};

// Rabi-unit envelope rates from the physical coefficients; the XPM rate is
// k * phase_multiplier * chi3 per squared gamma-unit Rabi envelope.
StepRates physical_step_rates(const AtomParams& atom, const FieldParams& fields,
                              const MediumParams& medium, Convention conv);

struct GridOptions {
  int nt = 256;        // time samples (FFT size)
  Real t_window = 0.0; // s, full width of the periodic time window
  int nz = 200;
  int snapshots = 8;   // interior snapshots in addition to z = 0 and z = l
};

struct PropagationFlags {
  bool include_loss = true;
  bool include_dispersion = true;
};

struct EnvelopeGrid {
  VectorXr t;                   // retarded time samples, s
  std::vector<Real> z;          // snapshot positions, m
  std::vector<VectorXc> e_p;    // envelope snapshots
  std::vector<VectorXc> e_t;
  Real step_bound = 0.0;        // max per-step phase advance (stability record)
};

// Strang split-step integration of
//   dE_p/dz = -kappa_p E_p + beta_p d^2/dt^2 E_p + i xpm_p |E_t|^2 E_p
//   dE_t/dz = -walkoff dE_t/dt - kappa_t E_t + beta_t d^2/dt^2 E_t + i xpm_t |E_p|^2 E_t
// The nonlinear step is exact per cell; loss and dispersion advance in the
// frequency domain.
EnvelopeGrid propagate(const StepRates& rates, const VectorXc& e_p0, const VectorXc& e_t0,
                       const GridOptions& grid, Real length, PropagationFlags flags = {});

}  // namespace tripod
