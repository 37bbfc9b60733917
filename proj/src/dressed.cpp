#include "tripod/dressed.hpp"

#include <cmath>

namespace tripod {

namespace {

// Global phase convention: first amplitude above threshold made real positive.
void fix_phase(Vector4c& v) {
  for (int i = 0; i < 4; ++i) {
    const Real a = std::abs(v[i]);
    if (a > 1e-12) {
      v *= std::conj(v[i]) / a;
      return;
    }
  }
}

DressedState make_state(Real energy, Vector4c v) {
  v.normalize();
  fix_phase(v);
  DressedState s;
  s.energy = energy;
  s.amplitudes = v;
  s.is_dark = std::abs(v[0]) < 1e-10;
  return s;
}

}  // namespace

Hamiltonian4 interaction_hamiltonian(const FieldParams& fields, const AtomParams& atom) {
  atom.validate();
  fields.validate();
  Hamiltonian4 h = Hamiltonian4::Zero();
  h(0, 0) = -atom.delta1;
  h(2, 2) = -(atom.delta1 - atom.delta2);
  h(3, 3) = -(atom.delta1 - atom.delta3);
  h(0, 1) = h(1, 0) = -fields.omega_p;
  h(0, 2) = h(2, 0) = -fields.omega_pump;
  h(0, 3) = h(3, 0) = -fields.omega_t;
  return h;
}

std::pair<DressedState, DressedState> dark_states(const FieldParams& fields) {
  fields.validate();
  const Real op = fields.omega_p, ot = fields.omega_t, om = fields.omega_pump;
  const Real s = op * op + ot * ot;
  if (!(s > 0.0)) throw DomainError("dark_states: Om_P and Om_T both zero");

  Vector4c e1;
  e1 << Complex(0), Complex(ot), Complex(0), Complex(-op);

  Vector4c e2;
  e2 << Complex(0), Complex(om * op), Complex(-s), Complex(om * ot);

  return {make_state(0.0, e1), make_state(0.0, e2)};
}

std::pair<DressedState, DressedState> bright_states(const FieldParams& fields) {
  fields.validate();
  const Real op = fields.omega_p, ot = fields.omega_t, om = fields.omega_pump;
  const Real w = std::sqrt(op * op + om * om + ot * ot);
  if (!(w > 0.0)) throw DomainError("bright_states: all Rabi frequencies zero");

  // H e = -alpha W e for e = alpha W |0> + Om_P |1> + Om |2> + Om_T |3>.
  Vector4c lo, hi;
  lo << Complex(w), Complex(op), Complex(om), Complex(ot);    // energy -W
  hi << Complex(-w), Complex(op), Complex(om), Complex(ot);   // energy +W
  return {make_state(-w, lo), make_state(w, hi)};
}

std::vector<DressedState> eigensystem(const Hamiltonian4& h) {
  const Real scale = std::max(Real(1), h.norm());
  if ((h - h.adjoint()).norm() > 1e-12 * scale)
    throw std::invalid_argument("eigensystem: Hamiltonian is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(h);
  if (solver.info() != Eigen::Success)
    throw NumericalError("eigensystem: eigensolver failed to converge");

  std::vector<DressedState> states;
  states.reserve(4);
  for (int i = 0; i < 4; ++i)
    states.push_back(make_state(solver.eigenvalues()[i], solver.eigenvectors().col(i)));
  return states;
}

}  // namespace tripod
