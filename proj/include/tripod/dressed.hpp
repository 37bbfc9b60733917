#pragma once

#include <vector>

#include "tripod/params.hpp"

namespace tripod {

// Semiclassical RWA Hamiltonian over the basis (|0>, |1>, |2>, |3>),
// gamma units, hbar == 1:
//   H = -[ d1 |0><0| + (d1-d2) |2><2| + (d1-d3) |3><3|
//          + Om_P (|0><1| + h.c.) + Om (|0><2| + h.c.) + Om_T (|0><3| + h.c.) ]
using Hamiltonian4 = Matrix4c;

struct DressedState {
  Real energy = 0.0;           // gamma units
  Vector4c amplitudes;         // unit norm, first nonzero entry real positive
  bool is_dark = false;        // |<0|state>| < 1e-10
};

Hamiltonian4 interaction_hamiltonian(const FieldParams& fields, const AtomParams& atom);

// Closed-form dark states, valid for delta_j = 0. Throws DomainError when
// Om_P = Om_T = 0 (the first state is then undefined).
std::pair<DressedState, DressedState> dark_states(const FieldParams& fields);

// Closed-form bright states for delta_j = 0, energies -W and +W with
// W = sqrt(Om_P^2 + Om^2 + Om_T^2). Returned in ascending energy order.
std::pair<DressedState, DressedState> bright_states(const FieldParams& fields);

// Full eigensystem, ascending energies, orthonormal amplitudes. Rejects
// non-Hermitian input.
std::vector<DressedState> eigensystem(const Hamiltonian4& h);

}  // namespace tripod
