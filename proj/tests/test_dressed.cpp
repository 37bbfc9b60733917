#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tripod/dressed.hpp"

using namespace tripod;

namespace {
const AtomParams kResonant{0, 0, 0, 0};
const FieldParams kRef{1.0, 1.0, 4.5};
}  // namespace

TEST_CASE("interaction Hamiltonian structure") {
  const Hamiltonian4 h = interaction_hamiltonian(kRef, kResonant);
  CHECK((h - h.adjoint()).norm() == doctest::Approx(0.0));
  for (int i = 0; i < 4; ++i) CHECK(h(i, i) == Complex(0, 0));  // off-diagonal only at delta = 0
  CHECK(std::abs(h(0, 1)) == doctest::Approx(1.0));
  CHECK(std::abs(h(0, 2)) == doctest::Approx(4.5));
  CHECK(std::abs(h(0, 3)) == doctest::Approx(1.0));

  const Hamiltonian4 z = interaction_hamiltonian(FieldParams{0, 0, 0}, kResonant);
  CHECK(z.norm() == 0.0);

  // equal detunings leave only the excited-state diagonal term
  const Hamiltonian4 d = interaction_hamiltonian(FieldParams{0, 0, 0}, AtomParams{2.5, 2.5, 2.5, 0});
  CHECK(d(0, 0) == Complex(-2.5, 0));
  CHECK(d(1, 1) == Complex(0, 0));
  CHECK(d(2, 2) == Complex(0, 0));
  CHECK(d(3, 3) == Complex(0, 0));
}

TEST_CASE("closed-form dark states") {
  SUBCASE("symmetric beams") {
    const auto [e1, e2] = dark_states(FieldParams{1.0, 1.0, 3.0});
    CHECK(e1.amplitudes[1].real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(e1.amplitudes[3].real() == doctest::Approx(-1 / std::sqrt(2.0)));
    CHECK(e1.is_dark);
    CHECK(e2.is_dark);
  }
  SUBCASE("probe off reduces the first state to |1>") {
    const auto [e1, e2] = dark_states(FieldParams{0.0, 0.7, 3.0});
    CHECK(std::abs(e1.amplitudes[1]) == doctest::Approx(1.0));
    CHECK(std::abs(e1.amplitudes[0]) + std::abs(e1.amplitudes[2]) + std::abs(e1.amplitudes[3]) ==
          doctest::Approx(0.0));
  }
  SUBCASE("reference amplitudes and annihilation by H") {
    const auto [e1, e2] = dark_states(kRef);
    const Real norm = std::sqrt(2.0 * 22.25);
    CHECK(e2.amplitudes[1].real() == doctest::Approx(4.5 / norm).epsilon(1e-12));
    CHECK(e2.amplitudes[3].real() == doctest::Approx(4.5 / norm).epsilon(1e-12));
    CHECK(e2.amplitudes[2].real() == doctest::Approx(-2.0 / norm).epsilon(1e-12));
    const Hamiltonian4 h = interaction_hamiltonian(kRef, kResonant);
    CHECK((h * e1.amplitudes).norm() <= 1e-10 * h.norm());
    CHECK((h * e2.amplitudes).norm() <= 1e-10 * h.norm());
  }
  SUBCASE("degenerate input rejected") {
    CHECK_THROWS_AS(dark_states(FieldParams{0.0, 0.0, 3.0}), DomainError);
  }
}

TEST_CASE("eigensystem at the reference point") {
  const Hamiltonian4 h = interaction_hamiltonian(kRef, kResonant);
  const auto states = eigensystem(h);
  const Real w = 4.716990566028302;  // sqrt(1 + 20.25 + 1)
  CHECK(states[0].energy == doctest::Approx(-w).epsilon(1e-12));
  CHECK(states[1].energy == doctest::Approx(0.0));
  CHECK(states[2].energy == doctest::Approx(0.0));
  CHECK(states[3].energy == doctest::Approx(w).epsilon(1e-12));
  CHECK(states[1].is_dark);
  CHECK(states[2].is_dark);
  CHECK_FALSE(states[0].is_dark);
}

TEST_CASE("zero Hamiltonian has four zero eigenvalues") {
  const auto states = eigensystem(Hamiltonian4::Zero());
  for (const auto& s : states) CHECK(s.energy == 0.0);
}

TEST_CASE("non-Hermitian input rejected") {
  Hamiltonian4 h = Hamiltonian4::Zero();
  h(0, 1) = Complex(1, 0);
  h(1, 0) = Complex(0.5, 0.3);
  CHECK_THROWS_AS(eigensystem(h), std::invalid_argument);
}

TEST_CASE("eigenvalues match an independent characteristic-polynomial solver") {
  oracles::TestRng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Hamiltonian4 h;
    for (int i = 0; i < 4; ++i) {
      h(i, i) = Complex(rng.uniform(-5, 5), 0);
      for (int j = i + 1; j < 4; ++j) {
        h(i, j) = Complex(rng.uniform(-3, 3), rng.uniform(-3, 3));
        h(j, i) = std::conj(h(i, j));
      }
    }
    auto states = eigensystem(h);
    auto roots = oracles::quartic_roots(oracles::char_poly(h));
    std::sort(roots.begin(), roots.end(),
              [](Complex a, Complex b) { return a.real() < b.real(); });
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(roots[i].imag()) < 1e-7);
      CHECK(states[i].energy == doctest::Approx(roots[i].real()).epsilon(1e-8));
    }
  }
}

TEST_CASE("dressed-state properties over random Rabi triples at zero detuning") {
  oracles::TestRng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    FieldParams f;
    f.omega_p = rng.uniform(0.05, 5.0);
    f.omega_t = rng.uniform(0.05, 5.0);
    f.omega_pump = rng.uniform(0.05, 8.0);
    const Hamiltonian4 h = interaction_hamiltonian(f, kResonant);
    const Real w = std::sqrt(f.omega_p * f.omega_p + f.omega_pump * f.omega_pump +
                             f.omega_t * f.omega_t);

    const auto [e1, e2] = dark_states(f);
    CHECK((h * e1.amplitudes).norm() <= 1e-10 * h.norm());
    CHECK((h * e2.amplitudes).norm() <= 1e-10 * h.norm());
    CHECK(std::abs(e1.amplitudes[0]) == 0.0);
    CHECK(std::abs(e2.amplitudes[0]) == 0.0);

    const auto states = eigensystem(h);
    CHECK(states[0].energy == doctest::Approx(-w).epsilon(1e-10));
    CHECK(states[3].energy == doctest::Approx(w).epsilon(1e-10));

    // orthonormal set
    Matrix4c basis;
    for (int i = 0; i < 4; ++i) basis.col(i) = states[i].amplitudes;
    CHECK((basis.adjoint() * basis - Matrix4c::Identity()).norm() < 1e-10);

    // closed-form bright states reproduced up to phase
    const auto [lo, hi] = bright_states(f);
    CHECK(std::abs(lo.amplitudes.dot(states[0].amplitudes)) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(hi.amplitudes.dot(states[3].amplitudes)) == doctest::Approx(1.0).epsilon(1e-8));

    // dark eigenspace spans the closed forms: projector overlap is complete
    const Vector4c p1 = states[1].amplitudes, p2 = states[2].amplitudes;
    auto in_span = [&](const Vector4c& v) {
      const Complex c1 = p1.dot(v), c2 = p2.dot(v);
      return (v - c1 * p1 - c2 * p2).norm();
    };
    CHECK(in_span(e1.amplitudes) < 1e-8);
    CHECK(in_span(e2.amplitudes) < 1e-8);
  }
}
