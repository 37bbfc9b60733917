#include "tripod/propagation.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>

#include "tripod/susceptibility.hpp"

namespace tripod {

void PulseSpec::validate() const {
  if (!(tau > 0.0)) throw std::invalid_argument("PulseSpec: tau must be > 0");
  if (!(peak_rabi >= 0.0)) throw std::invalid_argument("PulseSpec: peak_rabi must be >= 0");
}

PropagationCoeffs coefficients(const AtomParams& atom, const FieldParams& fields,
                               const MediumParams& medium) {
  atom.validate();
  fields.validate();
  medium.validate();

  const ComplexDetunings d = complex_detunings(atom);
  const Real om2 = fields.omega_pump * fields.omega_pump;
  const Complex xp = d.probe_two_photon();
  const Complex xt = d.trigger_two_photon();
  const Complex dp = om2 - d.d10 * xp;
  const Complex dt = om2 - d.d30 * xt;
  if (std::abs(dp) < 1e-9 || std::abs(dt) < 1e-9)
    throw DomainError("coefficients: EIT denominator at pole");

  const Real gsi = atom.gamma_si;
  const Real g2n_p = medium.g_p * medium.g_p * medium.n_atoms / (gsi * gsi);  // gamma^2 units
  const Real g2n_t = medium.g_t * medium.g_t * medium.n_atoms / (gsi * gsi);

  PropagationCoeffs c;
  c.ng_p = 0.5 * g2n_p / dp;
  c.ng_t = 0.5 * g2n_t / dt;
  c.anomalous_p = c.ng_p.real() < 0.0;
  c.anomalous_t = c.ng_t.real() < 0.0;
  c.vg_p = constants::c_light / (1.0 + c.ng_p.real());
  c.vg_t = constants::c_light / (1.0 + c.ng_t.real());

  const Real om_si = fields.omega_pump * gsi;
  const Real om_si2 = om_si * om_si;
  c.dwtr_p = transparency_window(om_si, gsi, medium.length, c.ng_p.real());
  c.dwtr_t = transparency_window(om_si, gsi, medium.length, c.ng_t.real());

  c.beta_p = std::conj(d.d10) * gsi * c.ng_p / (constants::c_light * om_si2);
  c.beta_t = std::conj(d.d30) * gsi * c.ng_t / (constants::c_light * om_si2);

  const Complex mi(0.0, -1.0);
  c.kappa_p = mi * xp * gsi * c.ng_p / constants::c_light;
  c.kappa_t = mi * xt * gsi * c.ng_t / constants::c_light;

  const Real eta_pref = medium.length * medium.g_p * medium.g_p * medium.g_t * medium.g_t *
                        medium.n_atoms /
                        (2.0 * constants::pi * constants::c_light * constants::c_light);
  c.eta_p = eta_pref * chi3_core(Beam::Probe, atom, fields) / (gsi * gsi * gsi);
  c.eta_t = eta_pref * chi3_core(Beam::Trigger, atom, fields) / (gsi * gsi * gsi);
  return c;
}

Real transparency_window(Real omega_pump_si, Real gamma_beam_si, Real length, Real ng_re) {
  return std::sqrt(constants::c_light * omega_pump_si * omega_pump_si /
                   (gamma_beam_si * length * ng_re));
}

Real zeta(Real length, Real vg_self, Real vg_other, Real tau_other) {
  if (!(vg_self > 0.0) || !(vg_other > 0.0))
    throw std::invalid_argument("zeta: group velocities must be > 0");
  if (!(tau_other > 0.0)) throw std::invalid_argument("zeta: tau must be > 0");
  return (1.0 - vg_self / vg_other) * std::sqrt(2.0) * length / (vg_self * tau_other);
}

Real erf_factor(Real z) {
  const Real z2 = z * z;
  if (std::abs(z) < 1e-4)
    return 2.0 / std::sqrt(constants::pi) * (1.0 - z2 / 3.0 + z2 * z2 / 10.0);
  return std::erf(z) / z;
}

Real nonlinear_phase(Beam beam, const AtomParams& atom, const FieldParams& fields,
                     const MediumParams& medium, const PulseSpec& pulse_p,
                     const PulseSpec& pulse_t, Convention conv) {
  pulse_p.validate();
  pulse_t.validate();
  const PropagationCoeffs c = coefficients(atom, fields, medium);

  const Real k = (beam == Beam::Probe) ? medium.k_p() : medium.k_t();
  const Real vg_self = (beam == Beam::Probe) ? c.vg_p : c.vg_t;
  const Real vg_other = (beam == Beam::Probe) ? c.vg_t : c.vg_p;
  const Real tau_other = (beam == Beam::Probe) ? pulse_t.tau : pulse_p.tau;
  const Real om_other = (beam == Beam::Probe) ? pulse_t.peak_rabi : pulse_p.peak_rabi;

  const Real zt = zeta(medium.length, vg_self, vg_other, tau_other);
  const Real conv_scale = phase_multiplier(conv) / phase_multiplier(Convention::SI);
  const Real core3_re = chi3_core(beam, atom, fields).real();

  return k * medium.length * (std::pow(constants::pi, 1.5) / 4.0) * erf_factor(zt) *
         chi_prefactor(beam, atom, medium) * om_other * om_other * core3_re * conv_scale;
}

StepRates physical_step_rates(const AtomParams& atom, const FieldParams& fields,
                              const MediumParams& medium, Convention conv) {
  const PropagationCoeffs c = coefficients(atom, fields, medium);
  StepRates r;
  r.kappa_p = c.kappa_p;
  r.kappa_t = c.kappa_t;
  r.beta_p = c.beta_p;
  r.beta_t = c.beta_t;
  const Real mult = phase_multiplier(conv);
  r.xpm_p = medium.k_p() * mult * chi_prefactor(Beam::Probe, atom, medium) *
            chi3_core(Beam::Probe, atom, fields);
  r.xpm_t = medium.k_t() * mult * chi_prefactor(Beam::Trigger, atom, medium) *
            chi3_core(Beam::Trigger, atom, fields);
  r.walkoff = 1.0 / c.vg_t - 1.0 / c.vg_p;
  return r;
}

EnvelopeGrid propagate(const StepRates& rates, const VectorXc& e_p0, const VectorXc& e_t0,
                       const GridOptions& grid, Real length, PropagationFlags flags) {
  const int nt = static_cast<int>(e_p0.size());
  if (nt < 2 || e_t0.size() != nt)
    throw std::invalid_argument("propagate: envelopes must share a size >= 2");
  if (!(grid.t_window > 0.0)) throw std::invalid_argument("propagate: t_window must be > 0");
  if (grid.nz < 1) throw std::invalid_argument("propagate: nz must be >= 1");

  const Real dz = length / grid.nz;
  const Complex ii(0.0, 1.0);

  // FFT angular frequencies of the periodic window.
  VectorXr omega(nt);
  for (int k = 0; k < nt; ++k) {
    const int kk = (k <= nt / 2) ? k : k - nt;
    omega[k] = 2.0 * constants::pi * kk / grid.t_window;
  }

  // Half-step linear factors in the frequency domain.
  VectorXc half_p(nt), half_t(nt);
  for (int k = 0; k < nt; ++k) {
    Complex ep(0, 0), et(0, 0);
    if (flags.include_loss) {
      ep -= rates.kappa_p;
      et -= rates.kappa_t;
    }
    if (flags.include_dispersion) {
      const Complex iw = ii * omega[k];
      ep += rates.beta_p * iw * iw;
      et += rates.beta_t * iw * iw;
    }
    et -= ii * omega[k] * rates.walkoff;
    half_p[k] = std::exp(ep * (dz / 2.0));
    half_t[k] = std::exp(et * (dz / 2.0));
  }

  const Real peak0 = std::max(e_p0.cwiseAbs().maxCoeff(), e_t0.cwiseAbs().maxCoeff());
  const Real max_i2 = peak0 * peak0;
  const Real wmax = constants::pi * nt / grid.t_window;
  EnvelopeGrid out;
  out.step_bound = std::max(std::max(std::abs(rates.xpm_p), std::abs(rates.xpm_t)) * max_i2 * dz,
                            std::max(std::abs(rates.beta_p), std::abs(rates.beta_t)) * wmax *
                                wmax * dz);
  if (out.step_bound > constants::pi)
    throw NumericalError("propagate: step bound exceeded, refine nz or nt");

  out.t.resize(nt);
  for (int k = 0; k < nt; ++k) out.t[k] = (k - nt / 2) * grid.t_window / nt;

  const int stride = std::max(1, grid.nz / std::max(1, grid.snapshots + 1));
  Eigen::FFT<Real> fft;
  VectorXc ep = e_p0, et = e_t0, spec(nt);

  auto linear_half = [&](VectorXc& e, const VectorXc& factor) {
    fft.fwd(spec, e);
    spec.array() *= factor.array();
    fft.inv(e, spec);
  };

  auto snapshot = [&](Real z) {
    out.z.push_back(z);
    out.e_p.push_back(ep);
    out.e_t.push_back(et);
  };
  snapshot(0.0);

  for (int s = 1; s <= grid.nz; ++s) {
    linear_half(ep, half_p);
    linear_half(et, half_t);
    // Cross-phase step. With real rates the intensities are invariants and
    // the exponential map is exact; a complex rate (nonlinear absorption)
    // changes them, so the exponent uses midpoint intensities obtained from
    // a half advance to keep the step second order.
    for (int k = 0; k < nt; ++k) {
      const Real it0 = std::norm(et[k]);
      const Real ip0 = std::norm(ep[k]);
      const Real it_mid = it0 * std::exp(-2.0 * rates.xpm_t.imag() * ip0 * dz / 2.0);
      const Real ip_mid = ip0 * std::exp(-2.0 * rates.xpm_p.imag() * it0 * dz / 2.0);
      ep[k] *= std::exp(ii * rates.xpm_p * it_mid * dz);
      et[k] *= std::exp(ii * rates.xpm_t * ip_mid * dz);
    }
    linear_half(ep, half_p);
    linear_half(et, half_t);

    if (!ep.allFinite() || !et.allFinite() ||
        std::max(ep.cwiseAbs().maxCoeff(), et.cwiseAbs().maxCoeff()) > 10.0 * peak0)
      throw NumericalError("propagate: envelope norm grew by >10x, integration unstable");

    if (s % stride == 0 || s == grid.nz) snapshot(s * dz);
  }
  return out;
}

}  // namespace tripod
