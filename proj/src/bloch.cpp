#include "tripod/bloch.hpp"

#include <cmath>

#include "tripod/dressed.hpp"

namespace tripod {

namespace {

Matrix16c kron4(const Matrix4c& a, const Matrix4c& b) {
  Matrix16c k;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) k.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
  return k;
}

void add_dissipator(Liouvillian& L, const Matrix4c& c) {
  const Matrix4c cdc = c.adjoint() * c;
  const Matrix4c i4 = Matrix4c::Identity();
  L += kron4(c.conjugate(), c);
  L -= 0.5 * kron4(i4, cdc);
  L -= 0.5 * kron4(cdc.transpose(), i4);
}

Matrix4c hermitize(Matrix4c rho) {
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return rho;
}

}  // namespace

Liouvillian build_liouvillian(const AtomParams& atom, const FieldParams& fields,
                              const std::array<Real, 3>& branching) {
  atom.validate();
  const Real bsum = branching[0] + branching[1] + branching[2];
  if (std::abs(bsum - 1.0) > 1e-12)
    throw std::invalid_argument("build_liouvillian: branching ratios must sum to 1");

  const Matrix4c h = interaction_hamiltonian(fields, atom);
  const Matrix4c i4 = Matrix4c::Identity();
  const Complex ii(0.0, 1.0);

  Liouvillian L = -ii * (kron4(i4, h) - kron4(h.transpose(), i4));

  // Emission compensated for the dephasing contribution to rho_j0.
  const Real emission = 2.0 - 2.0 * atom.gamma_d / 3.0;
  if (emission < 0.0) throw std::invalid_argument("build_liouvillian: gamma_d too large");
  for (int k = 1; k <= 3; ++k) {
    const Real rate = emission * branching[k - 1];
    if (rate == 0.0) continue;
    Matrix4c c = Matrix4c::Zero();
    c(k, 0) = std::sqrt(rate);
    add_dissipator(L, c);
  }

  if (atom.gamma_d > 0.0) {
    const Real g = std::sqrt(atom.gamma_d / 3.0);
    constexpr int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    for (auto [a, b] : pairs) {
      Matrix4c c = Matrix4c::Zero();
      c(a, a) = g;
      c(b, b) = -g;
      add_dissipator(L, c);
    }
  }
  return L;
}

Matrix4c steady_state(const AtomParams& atom, const FieldParams& fields) {
  fields.validate();
  if (fields.omega_p == 0.0 && fields.omega_t == 0.0 && fields.omega_pump == 0.0)
    throw DomainError("steady_state: no optical drive, stationary state not unique");

  const Liouvillian L = build_liouvillian(atom, fields);

  Eigen::ComplexEigenSolver<Matrix16c> eig(L);
  if (eig.info() != Eigen::Success) throw NumericalError("steady_state: eigensolver failed");

  constexpr Real kKernelTol = 1e-10;  // true kernels land ~1e-14, slow modes >~1e-8
  int kernel_dim = 0;
  for (int i = 0; i < 16; ++i)
    if (std::abs(eig.eigenvalues()[i]) < kKernelTol) ++kernel_dim;

  Matrix4c rho;
  if (kernel_dim <= 1) {
    Matrix16c m = L;
    m.row(0).setZero();
    for (int j = 0; j < 4; ++j) m(0, 5 * j) = 1.0;  // trace row
    Vector16c b = Vector16c::Zero();
    b[0] = 1.0;
    rho = unvec(Vector16c(m.fullPivLu().solve(b)));
  } else {
    // Infinite-time limit of the maximally mixed state: keep kernel modes only.
    const Vector16c c = eig.eigenvectors().fullPivLu().solve(vec(Matrix4c(0.25 * Matrix4c::Identity())));
    Vector16c v = Vector16c::Zero();
    for (int i = 0; i < 16; ++i)
      if (std::abs(eig.eigenvalues()[i]) < kKernelTol) v += eig.eigenvectors().col(i) * c[i];
    rho = unvec(v);
  }

  rho = hermitize(rho);
  const Real residual = (L * vec(rho)).norm();
  if (residual > 1e-8)
    throw NumericalError("steady_state: residual " + std::to_string(residual));
  return rho;
}

Trajectory time_evolve(const AtomParams& atom, const FieldParams& fields, const Matrix4c& rho0,
                       Real t_final, Real dt, int stride) {
  if (!(dt > 0.0)) throw std::invalid_argument("time_evolve: dt must be > 0");
  if (!(t_final >= 0.0)) throw std::invalid_argument("time_evolve: t_final must be >= 0");
  if (stride < 1) stride = 1;

  const Liouvillian L = build_liouvillian(atom, fields);
  const long n_steps = static_cast<long>(std::ceil(t_final / dt));
  if (n_steps > 0 && t_final / n_steps < 1e-300)
    throw NumericalError("time_evolve: step size underflow");
  const Real h = n_steps > 0 ? t_final / n_steps : 0.0;
  const Real norm0 = rho0.norm();

  Trajectory traj;
  Vector16c v = vec(rho0);
  traj.t.push_back(0.0);
  traj.rho.push_back(rho0);

  for (long s = 1; s <= n_steps; ++s) {
    const Vector16c k1 = L * v;
    const Vector16c k2 = L * (v + 0.5 * h * k1);
    const Vector16c k3 = L * (v + 0.5 * h * k2);
    const Vector16c k4 = L * (v + h * k3);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!v.allFinite() || v.norm() > 10.0 * std::max(norm0, Real(1)))
      throw NumericalError("time_evolve: integration unstable, reduce dt");
    if (s % stride == 0 || s == n_steps) {
      traj.t.push_back(s * h);
      traj.rho.push_back(unvec(v));
    }
  }
  return traj;
}

Complex chi_from_bloch(const AtomParams& atom, const FieldParams& fields,
                       const MediumParams& medium, Beam beam, Convention conv) {
  (void)conv;  // chi values coincide numerically under both conventions
  const Real omega = (beam == Beam::Probe) ? fields.omega_p : fields.omega_t;
  if (!(omega > 0.0)) throw DomainError("chi_from_bloch: requested beam has zero Rabi frequency");

  const Matrix4c rho = steady_state(atom, fields);
  const int j = (beam == Beam::Probe) ? 1 : 3;
  // <0|rho|j> is the positive-frequency coherence driving the beam's polarization.
  return chi_prefactor(beam, atom, medium) * rho(0, j) / omega;
}

}  // namespace tripod
