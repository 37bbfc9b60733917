#include "tripod/params.hpp"

#include <cmath>

namespace tripod {

void AtomParams::validate() const {
  if (!(std::isfinite(delta1) && std::isfinite(delta2) && std::isfinite(delta3)))
    throw std::invalid_argument("AtomParams: detunings must be finite");
  if (!(gamma_si > 0.0)) throw std::invalid_argument("AtomParams: gamma_si must be > 0");
  if (!(gamma_d >= 0.0)) throw std::invalid_argument("AtomParams: gamma_d must be >= 0");
}

void FieldParams::validate() const {
  if (!(omega_p >= 0.0 && omega_t >= 0.0 && omega_pump >= 0.0))
    throw std::invalid_argument("FieldParams: Rabi frequencies must be >= 0");
  if (!(std::isfinite(omega_p) && std::isfinite(omega_t) && std::isfinite(omega_pump)))
    throw std::invalid_argument("FieldParams: Rabi frequencies must be finite");
}

void MediumParams::validate() const {
  auto pos = [](Real v) { return std::isfinite(v) && v > 0.0; };
  if (!(pos(density) && pos(length) && pos(lambda_p) && pos(lambda_t) && pos(dipole_p) &&
        pos(dipole_t) && pos(g_p) && pos(g_t) && pos(n_atoms)))
    throw std::invalid_argument("MediumParams: all fields must be strictly positive");
}

ComplexDetunings complex_detunings(const AtomParams& atom) {
  const Complex ig(0.0, 1.0);          // i * gamma, gamma == 1
  const Complex igd(0.0, atom.gamma_d);
  ComplexDetunings d;
  d.d10 = atom.delta1 + ig;
  d.d20 = atom.delta2 + ig;
  d.d30 = atom.delta3 + ig;
  d.d12 = atom.delta2 - atom.delta1 - igd;
  d.d13 = atom.delta3 - atom.delta1 - igd;
  d.d23 = atom.delta3 - atom.delta2 - igd;
  return d;
}

Real chi_prefactor(Beam beam, const AtomParams& atom, const MediumParams& medium) {
  const Real mu = (beam == Beam::Probe) ? medium.dipole_p : medium.dipole_t;
  return medium.density * mu * mu / (constants::hbar * constants::epsilon0 * atom.gamma_si);
}

Real phase_multiplier(Convention conv) {
  return conv == Convention::SI ? 0.5 : 2.0 * constants::pi;
}

const char* to_string(Convention conv) { return conv == Convention::SI ? "si" : "gaussian"; }

const char* to_string(Polarization pol) {
  return pol == Polarization::SigmaPlus ? "sigma+" : "sigma-";
}

}  // namespace tripod
