#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tripod/params.hpp"

using namespace tripod;

TEST_CASE("complex detunings at the pi-phase working point") {
  AtomParams atom{10.01, 10.0, 10.02, 1e-2};
  const ComplexDetunings d = complex_detunings(atom);
  CHECK(d.d12.real() == doctest::Approx(-0.01).epsilon(1e-12));
  CHECK(d.d12.imag() == doctest::Approx(-0.01).epsilon(1e-12));
  CHECK(d.d10 == Complex(10.01, 1.0));
  CHECK(d.d23.real() == doctest::Approx(0.02).epsilon(1e-12));
  CHECK(d.d23.imag() == doctest::Approx(-0.01).epsilon(1e-12));
}

TEST_CASE("complex detunings degenerate cases") {
  const ComplexDetunings z = complex_detunings(AtomParams{0, 0, 0, 0});
  CHECK(z.d12 == Complex(0, 0));
  CHECK(z.d13 == Complex(0, 0));
  CHECK(z.d23 == Complex(0, 0));
  CHECK(z.d10 == Complex(0, 1));  // pure decay
  CHECK(z.d20 == Complex(0, 1));
  CHECK(z.d30 == Complex(0, 1));
}

TEST_CASE("telescoping identity and round trips over random detunings") {
  oracles::TestRng rng(31);
  for (int i = 0; i < 100; ++i) {
    AtomParams atom;
    atom.delta1 = rng.uniform(-20, 20);
    atom.delta2 = rng.uniform(-20, 20);
    atom.delta3 = rng.uniform(-20, 20);
    atom.gamma_d = rng.uniform(0, 0.1);
    const ComplexDetunings d = complex_detunings(atom);
    CHECK(d.d13.real() == doctest::Approx(d.d12.real() + d.d23.real()).epsilon(1e-13));
    CHECK(d.d13.imag() == doctest::Approx(-atom.gamma_d));
    CHECK(d.d10.imag() == doctest::Approx(1.0));
    // detunings recoverable from the real parts
    CHECK(d.d10.real() == doctest::Approx(atom.delta1));
    CHECK(d.d12.real() == doctest::Approx(atom.delta2 - atom.delta1));
    // conjugate combinations are derived, never drift
    CHECK(d.probe_two_photon() == -d.d12);
    CHECK(d.trigger_two_photon() == std::conj(d.d23));
  }
}

TEST_CASE("unit conversions compose to identity") {
  const Real gsi = 2 * constants::pi * 6e6;
  CHECK(to_si_angular(4.5, gsi) == doctest::Approx(4.5 * gsi));
  CHECK(to_si_angular(0.0, gsi) == 0.0);
  CHECK(to_si_time(1.0, 1.0) == 1.0);  // 1/gamma at gamma = 1 rad/s is 1 s
  oracles::TestRng rng(7);
  for (int i = 0; i < 50; ++i) {
    const Real x = rng.uniform(-1e3, 1e3);
    CHECK(from_si_angular(to_si_angular(x, gsi), gsi) == doctest::Approx(x).epsilon(1e-15));
    CHECK(from_si_time(to_si_time(x, gsi), gsi) == doctest::Approx(x).epsilon(1e-15));
  }
}

TEST_CASE("parameter validation") {
  AtomParams bad_gd;
  bad_gd.gamma_d = -0.1;
  CHECK_THROWS_AS(bad_gd.validate(), std::invalid_argument);

  AtomParams bad_delta;
  bad_delta.delta1 = std::numeric_limits<Real>::infinity();
  CHECK_THROWS_AS(bad_delta.validate(), std::invalid_argument);

  FieldParams bad_rabi;
  bad_rabi.omega_p = -1.0;
  CHECK_THROWS_AS(bad_rabi.validate(), std::invalid_argument);

  MediumParams m{3e18, 7e-3, 795e-9, 795e-9, 1e-29, 1e-29, 3.4e6, 3.4e6, 2.1e8};
  CHECK_NOTHROW(m.validate());
  m.length = 0.0;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  // wavenumbers derived from the wavelengths
  m.length = 7e-3;
  CHECK(m.k_p() == doctest::Approx(2 * constants::pi / 795e-9));
}
