#include "tripod/susceptibility.hpp"

#include <cmath>

namespace tripod {

namespace {

constexpr Real kPoleTol = 1e-9;  // gamma^2 units

struct BeamVars {
  Complex x_self;   // two-photon variable of this beam
  Complex x_other;
  Complex d_self;   // |Om|^2 - d_b0 * X
  Complex d_other;
  Complex y;        // self-other ground coherence variable
};

BeamVars beam_vars(Beam beam, const AtomParams& atom, const FieldParams& fields) {
  const ComplexDetunings d = complex_detunings(atom);
  const Real om2 = fields.omega_pump * fields.omega_pump;
  const Complex xp = d.probe_two_photon();
  const Complex xt = d.trigger_two_photon();
  const Complex dp = om2 - d.d10 * xp;
  const Complex dt = om2 - d.d30 * xt;
  if (std::abs(dp) < kPoleTol || std::abs(dt) < kPoleTol)
    throw DomainError("susceptibility: EIT denominator at pole");
  if (beam == Beam::Probe) return {xp, xt, dp, dt, d.probe_trigger_ground()};
  return {xt, xp, dt, dp, d.trigger_probe_ground()};
}

}  // namespace

Complex chi1_core(Beam beam, const AtomParams& atom, const FieldParams& fields) {
  const BeamVars v = beam_vars(beam, atom, fields);
  return kPopulationSymmetric * v.x_self / v.d_self;
}

Complex chi3_core(Beam beam, const AtomParams& atom, const FieldParams& fields) {
  const BeamVars v = beam_vars(beam, atom, fields);
  if (std::abs(v.y) < kPoleTol)
    throw DomainError("susceptibility: degenerate probe/trigger detunings (chi3 singular)");
  const Complex self_term = v.x_self / v.d_self;
  const Complex other_term = std::conj(v.x_other) / std::conj(v.d_other);
  return -kPopulationSymmetric * (v.x_self / v.y) * (self_term - other_term) / v.d_self;
}

Complex chi1(Beam beam, const AtomParams& atom, const FieldParams& fields,
             const MediumParams& medium, Convention conv) {
  (void)conv;
  return chi_prefactor(beam, atom, medium) * chi1_core(beam, atom, fields);
}

Complex chi3(Beam beam, const AtomParams& atom, const FieldParams& fields,
             const MediumParams& medium, Convention conv) {
  (void)conv;
  // Value per |E|^2 with E expressed through the partner Rabi frequency,
  // |E|^2 = hbar^2 |Om|^2 / |mu|^2; in gamma units the product
  // chi3 * Om_hat^2 uses the same prefactor as chi1.
  const Real mu_other = (beam == Beam::Probe) ? medium.dipole_t : medium.dipole_p;
  const Real pref3 = chi_prefactor(beam, atom, medium) * mu_other * mu_other /
                     (constants::hbar * constants::hbar * atom.gamma_si * atom.gamma_si);
  return pref3 * chi3_core(beam, atom, fields);
}

Susceptibilities susceptibilities(const AtomParams& atom, const FieldParams& fields,
                                  const MediumParams& medium, Convention conv) {
  Susceptibilities s;
  s.core1_p = chi1_core(Beam::Probe, atom, fields);
  s.core1_t = chi1_core(Beam::Trigger, atom, fields);
  s.core3_p = chi3_core(Beam::Probe, atom, fields);
  s.core3_t = chi3_core(Beam::Trigger, atom, fields);
  s.chi1_p = chi_prefactor(Beam::Probe, atom, medium) * s.core1_p;
  s.chi1_t = chi_prefactor(Beam::Trigger, atom, medium) * s.core1_t;
  s.chi3_p = chi3(Beam::Probe, atom, fields, medium, conv);
  s.chi3_t = chi3(Beam::Trigger, atom, fields, medium, conv);
  s.convention = conv;
  return s;
}

Complex chi1_core_published(Beam beam, const AtomParams& atom, const FieldParams& fields) {
  const ComplexDetunings d = complex_detunings(atom);
  const Real om2 = fields.omega_pump * fields.omega_pump;
  if (beam == Beam::Probe) return 0.5 * d.d12 / (d.d10 * d.d12 - om2);
  const Complex d23c = std::conj(d.d23);
  return 0.5 * d23c / (d.d30 * d23c - om2);
}

Complex chi3_core_published(Beam beam, const AtomParams& atom, const FieldParams& fields) {
  const ComplexDetunings d = complex_detunings(atom);
  const Real om2 = fields.omega_pump * fields.omega_pump;
  if (beam == Beam::Probe) {
    const Complex den_p = d.d10 * d.d12 - om2;
    const Complex den_t = std::conj(d.d30) * d.d23 - om2;
    return 0.5 * (d.d12 / d.d13) / den_p * (d.d12 / den_p + d.d23 / den_t);
  }
  const Complex d23c = std::conj(d.d23);
  const Complex den_t = d.d30 * d23c - om2;
  const Complex den_p = std::conj(d.d10) * std::conj(d.d12) - om2;
  return 0.5 * (d23c / std::conj(d.d13)) / den_t * (d.d12 / den_p + d23c / den_t);
}

Real absorption_exponent(Complex chi, Real k, Real length, Convention conv) {
  return 2.0 * k * length * phase_multiplier(conv) * chi.imag();
}

}  // namespace tripod
