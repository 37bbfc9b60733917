#include "tripod/quantum_phase.hpp"

#include <cmath>

namespace tripod {

void CoherentInput::validate() const {
  if (!(delta_omega > 0.0))
    throw std::invalid_argument("CoherentInput: delta_omega must be > 0");
}

QuantumPhases quantum_phase(const AtomParams& atom, const FieldParams& fields,
                            const MediumParams& medium, Real delta_omega) {
  if (!(delta_omega > 0.0)) throw std::invalid_argument("quantum_phase: delta_omega must be > 0");
  const PropagationCoeffs c = coefficients(atom, fields, medium);
  QuantumPhases q;
  q.phi_p = constants::c_light * c.eta_p.real() * delta_omega;
  q.phi_t = constants::c_light * c.eta_t.real() * delta_omega;
  q.absorption_p = -constants::c_light * c.eta_p.imag() * delta_omega;
  q.absorption_t = -constants::c_light * c.eta_t.imag() * delta_omega;
  return q;
}

QuantumPhaseResult coherent_expectation(const CoherentInput& in, Real phi_p, Real phi_t) {
  in.validate();
  QuantumPhaseResult r;
  r.phi_p = phi_p;
  r.phi_t = phi_t;

  const Real np = std::norm(in.alpha_p) / in.delta_omega;
  const Real nt = std::norm(in.alpha_t) / in.delta_omega;

  const Real sp = std::sin(phi_p / 2.0), st = std::sin(phi_t / 2.0);
  const Complex exp_p(-2.0 * sp * sp * nt, std::sin(phi_p) * nt);
  const Complex exp_t(-2.0 * st * st * np, std::sin(phi_t) * np);

  r.mean_e_p = in.alpha_p * std::exp(exp_p);
  r.mean_e_t = in.alpha_t * std::exp(exp_t);
  r.damping_p = -exp_p.real();
  r.damping_t = -exp_t.real();
  return r;
}

}  // namespace tripod
