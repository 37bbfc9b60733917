#pragma once

#include <array>
#include <vector>

#include "tripod/params.hpp"

namespace tripod {

// Superoperator acting on column-stacked rho (vec[j*4+i] = rho(i,j)).
using Liouvillian = Matrix16c;

inline Vector16c vec(const Matrix4c& rho) {
  return Eigen::Map<const Vector16c>(rho.data());
}
inline Matrix4c unvec(const Vector16c& v) {
  return Eigen::Map<const Matrix4c>(v.data());
}

// Lindblad generator: coherent part from the interaction Hamiltonian,
// spontaneous emission from |0> at total rate Gamma = 2 gamma - 2 gamma_d / 3
// split over the ground states by `branching`, and pure ground-state
// dephasing sqrt(gamma_d/3) (P_j - P_k) over the three ground pairs. The
// emission rate is calibrated so that every optical coherence rho_j0 decays
// at exactly gamma and every ground coherence rho_kj at exactly gamma_d.
Liouvillian build_liouvillian(const AtomParams& atom, const FieldParams& fields,
                              const std::array<Real, 3>& branching = {1.0 / 3.0, 1.0 / 3.0,
                                                                      1.0 / 3.0});

// Stationary density matrix. For a unique kernel this solves the bordered
// linear system (trace row replacement). A degenerate kernel (decoherence-free
// subspaces at gamma_d = 0, or decoupled levels) is resolved by projecting the
// maximally mixed state onto the kernel, which is the infinite-time limit of
// an unpolarized ensemble. Throws DomainError when no field drives the atom.
Matrix4c steady_state(const AtomParams& atom, const FieldParams& fields);

struct Trajectory {
  std::vector<Real> t;           // gamma^-1 units
  std::vector<Matrix4c> rho;
};

// Fixed-step RK4 integration of d rho / dt = L rho, sampled every `stride`
// steps (first and last states always included).
Trajectory time_evolve(const AtomParams& atom, const FieldParams& fields, const Matrix4c& rho0,
                       Real t_final, Real dt, int stride = 1);

// Steady-state susceptibility extracted from the exact solution:
// chi = prefactor * <0|rho|j> / Om_beam. Serves as the brute-force oracle for
// the closed-form chi^(1) + chi^(3) |E|^2 expansion.
Complex chi_from_bloch(const AtomParams& atom, const FieldParams& fields,
                       const MediumParams& medium, Beam beam, Convention conv);

}  // namespace tripod
