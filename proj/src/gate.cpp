#include "tripod/gate.hpp"

#include <algorithm>
#include <cmath>

#include "tripod/susceptibility.hpp"

namespace tripod {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Real uniform01(std::uint64_t& state) {
  return (splitmix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace

std::array<Real, 3> gaussian_triplet(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t state = seed ^ (counter * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
  std::array<Real, 3> g{};
  const Real u1 = 1.0 - uniform01(state);  // (0, 1]
  const Real u2 = uniform01(state);
  const Real u3 = 1.0 - uniform01(state);
  const Real u4 = uniform01(state);
  const Real r1 = std::sqrt(-2.0 * std::log(u1));
  const Real r2 = std::sqrt(-2.0 * std::log(u3));
  g[0] = r1 * std::cos(2.0 * constants::pi * u2);
  g[1] = r1 * std::sin(2.0 * constants::pi * u2);
  g[2] = r2 * std::cos(2.0 * constants::pi * u4);
  return g;
}

void NoiseModel::validate() const {
  if (!(level >= 0.0)) throw std::invalid_argument("NoiseModel: level must be >= 0");
  if (samples < 1) throw std::invalid_argument("NoiseModel: samples must be >= 1");
}

PhaseShifts phase_shifts(const AtomParams& atom, const FieldParams& fields,
                         const MediumParams& medium, const PulseSpec& pulse_p,
                         const PulseSpec& pulse_t, Convention conv) {
  const Real mult = phase_multiplier(conv);
  PhaseShifts s;
  s.convention = conv;
  s.phi0_p = medium.k_p() * medium.length;
  s.phi0_t = medium.k_t() * medium.length;
  s.phi_lin_p =
      s.phi0_p * (1.0 + mult * (chi_prefactor(Beam::Probe, atom, medium) *
                                chi1_core(Beam::Probe, atom, fields)).real());
  s.phi_lin_t =
      s.phi0_t * (1.0 + mult * (chi_prefactor(Beam::Trigger, atom, medium) *
                                chi1_core(Beam::Trigger, atom, fields)).real());
  s.phi_nlin_p = nonlinear_phase(Beam::Probe, atom, fields, medium, pulse_p, pulse_t, conv);
  s.phi_nlin_t = nonlinear_phase(Beam::Trigger, atom, fields, medium, pulse_p, pulse_t, conv);
  return s;
}

GateTruthTable truth_table(const AtomParams& atom, const FieldParams& fields,
                           const MediumParams& medium, const PulseSpec& pulse_p,
                           const PulseSpec& pulse_t, Convention conv) {
  const PhaseShifts s = phase_shifts(atom, fields, medium, pulse_p, pulse_t, conv);
  const Real vac = s.phi0_p + s.phi0_t;
  const Real lin_p = s.phi_lin_p - s.phi0_p;
  const Real lin_t = s.phi_lin_t - s.phi0_t;

  auto entry = [vac](Real linear, Real nonlinear) {
    GateEntry e;
    e.vacuum = vac;
    e.linear = linear;
    e.nonlinear = nonlinear;
    e.total = vac + linear + nonlinear;
    return e;
  };

  GateTruthTable t;
  t.mm = entry(lin_t, 0.0);                               // probe passive, trigger couples
  t.mp = entry(0.0, 0.0);                                 // both passive
  t.pp = entry(lin_p, 0.0);                               // probe couples, trigger passive
  t.pm = entry(lin_p + lin_t, s.phi_nlin_p + s.phi_nlin_t);
  t.shifts = s;
  return t;
}

Real conditional_phase(const GateTruthTable& table) {
  // (phi_+^P + phi_-^T) minus the two linear phases: vacuum and linear cancel.
  return table.pm.total - table.pm.vacuum - table.pm.linear;
}

std::vector<std::pair<Real, Real>> absorption_scan(Real gamma_d_max, int points,
                                                   const AtomParams& atom,
                                                   const FieldParams& fields,
                                                   const MediumParams& medium) {
  if (points < 2) throw std::invalid_argument("absorption_scan: need at least 2 points");
  if (!(gamma_d_max > 0.0)) throw std::invalid_argument("absorption_scan: gamma_d_max must be > 0");

  std::vector<std::pair<Real, Real>> curve;
  curve.reserve(points);
  Real peak = 0.0;
  for (int i = 0; i < points; ++i) {
    AtomParams a = atom;
    a.gamma_d = gamma_d_max * i / (points - 1);
    const Complex chi = chi_prefactor(Beam::Probe, a, medium) * chi1_core(Beam::Probe, a, fields);
    const Real alpha = absorption_exponent(chi, medium.k_p(), medium.length, Convention::SI);
    curve.emplace_back(a.gamma_d, alpha);
    peak = std::max(peak, std::abs(alpha));
  }
  if (peak > 0.0)
    for (auto& [gd, v] : curve) v /= peak;
  return curve;
}

McResult gate_error_mc(const NoiseModel& noise, const AtomParams& atom,
                       const FieldParams& fields, const MediumParams& medium,
                       const PulseSpec& pulse_p, const PulseSpec& pulse_t, Convention conv) {
  noise.validate();

  auto phases_for = [&](Real mp, Real mt, Real mo) {
    FieldParams f = fields;
    PulseSpec qp = pulse_p, qt = pulse_t;
    const Real sp = std::sqrt(mp), st = std::sqrt(mt), so = std::sqrt(mo);
    f.omega_p *= sp;
    f.omega_t *= st;
    f.omega_pump *= so;
    qp.peak_rabi *= sp;
    qt.peak_rabi *= st;
    return phase_shifts(atom, f, medium, qp, qt, conv);
  };

  const PhaseShifts base = phases_for(1.0, 1.0, 1.0);
  const Real phi0 = base.phi_nlin_p + base.phi_nlin_t;

  McResult r;
  r.conditional_noiseless = phi0;
  r.dphi.reserve(noise.samples);

  Real sum_err = 0.0, sum_err2 = 0.0, sum_unc = 0.0;
  for (int i = 0; i < noise.samples; ++i) {
    const auto g = gaussian_triplet(noise.seed, static_cast<std::uint64_t>(i));
    const Real mp = noise.fluctuate_probe ? 1.0 + noise.level * g[0] : 1.0;
    const Real mt = noise.fluctuate_trigger ? 1.0 + noise.level * g[1] : 1.0;
    const Real mo = noise.fluctuate_pump ? 1.0 + noise.level * g[2] : 1.0;
    if (mp <= 0.0 || mt <= 0.0 || mo <= 0.0) {
      ++r.failed_samples;
      continue;
    }
    PhaseShifts s;
    try {
      s = phases_for(mp, mt, mo);
    } catch (const DomainError&) {
      ++r.failed_samples;
      continue;
    }
    const Real dphi = (s.phi_nlin_p + s.phi_nlin_t) - phi0;
    r.dphi.push_back(dphi);

    const Real c = std::cos(dphi / 2.0);
    const Real err = 1.0 - c * c;
    sum_err += err;
    sum_err2 += err * err;

    // All four entry phases without correcting local (single-qubit) phases.
    const Real d_mm = (s.phi_lin_t - base.phi_lin_t);
    const Real d_pp = (s.phi_lin_p - base.phi_lin_p);
    const Real d_pm = d_mm + d_pp + dphi;
    const Complex overlap = 0.25 * (std::exp(Complex(0, d_mm)) + 1.0 +
                                    std::exp(Complex(0, d_pp)) + std::exp(Complex(0, d_pm)));
    sum_unc += 1.0 - std::norm(overlap);
  }

  const int n = static_cast<int>(r.dphi.size());
  if (n == 0) throw NumericalError("gate_error_mc: every sample failed");
  r.mean_error = sum_err / n;
  r.mean_error_uncorrected = sum_unc / n;
  const Real var = std::max(0.0, sum_err2 / n - r.mean_error * r.mean_error);
  r.sem = std::sqrt(var / n);

  Real mean_dphi = 0.0;
  for (Real d : r.dphi) mean_dphi += d;
  mean_dphi /= n;
  Real var_dphi = 0.0;
  for (Real d : r.dphi) var_dphi += (d - mean_dphi) * (d - mean_dphi);
  r.dphi_std = std::sqrt(var_dphi / n);

  std::vector<Real> sorted = r.dphi;
  std::sort(sorted.begin(), sorted.end());
  const std::array<Real, 5> qs{0.05, 0.25, 0.5, 0.75, 0.95};
  for (std::size_t k = 0; k < qs.size(); ++k) {
    const Real pos = qs[k] * (n - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const auto hi = std::min<std::size_t>(lo + 1, n - 1);
    const Real w = pos - lo;
    r.dphi_quantiles[k] = (1.0 - w) * sorted[lo] + w * sorted[hi];
  }
  return r;
}

}  // namespace tripod
