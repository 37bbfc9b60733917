// tripod: steady states, susceptibilities, slow-light coefficients and the
// polarization phase gate of a four-level tripod atom.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "tripod/bloch.hpp"
#include "tripod/config.hpp"
#include "tripod/dressed.hpp"
#include "tripod/gate.hpp"
#include "tripod/quantum_phase.hpp"
#include "tripod/susceptibility.hpp"

using nlohmann::json;
using namespace tripod;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNumerical = 4;

std::string fmt(Real v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json cjson(const Complex& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

struct Output {
  std::string path;    // empty = stdout
  std::string format;  // "json" or "csv"

  void emit(const std::string& content) const {
    if (path.empty())
      std::cout << content;
    else
      atomic_write(path, content);
  }
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Real default_delta_omega(const RunConfig& cfg) {
  if (cfg.quantum.delta_omega > 0.0) return cfg.quantum.delta_omega;
  const PropagationCoeffs c = coefficients(cfg.atom, cfg.fields, cfg.medium);
  return std::min(c.dwtr_p, c.dwtr_t);
}

json susceptibility_record(const RunConfig& cfg) {
  const Susceptibilities s = susceptibilities(cfg.atom, cfg.fields, cfg.medium, cfg.convention);
  return json{{"convention", to_string(s.convention)},
              {"chi1_p", cjson(s.chi1_p)},
              {"chi1_t", cjson(s.chi1_t)},
              {"chi3_p", cjson(s.chi3_p)},
              {"chi3_t", cjson(s.chi3_t)},
              {"core1_p", cjson(s.core1_p)},
              {"core1_t", cjson(s.core1_t)},
              {"core3_p", cjson(s.core3_p)},
              {"core3_t", cjson(s.core3_t)},
              {"published_core1_p", cjson(chi1_core_published(Beam::Probe, cfg.atom, cfg.fields))},
              {"published_core1_t", cjson(chi1_core_published(Beam::Trigger, cfg.atom, cfg.fields))},
              {"absorption_exponent_p",
               absorption_exponent(s.chi1_p, cfg.medium.k_p(), cfg.medium.length, cfg.convention)},
              {"absorption_exponent_t",
               absorption_exponent(s.chi1_t, cfg.medium.k_t(), cfg.medium.length, cfg.convention)}};
}

std::string susceptibility_csv_row(const RunConfig& cfg, Real param_value) {
  const Susceptibilities s = susceptibilities(cfg.atom, cfg.fields, cfg.medium, cfg.convention);
  const Real ap = absorption_exponent(s.chi1_p, cfg.medium.k_p(), cfg.medium.length, cfg.convention);
  const Real at = absorption_exponent(s.chi1_t, cfg.medium.k_t(), cfg.medium.length, cfg.convention);
  std::ostringstream row;
  row << fmt(param_value) << ',' << fmt(s.chi1_p.real()) << ',' << fmt(s.chi1_p.imag()) << ','
      << fmt(s.chi1_t.real()) << ',' << fmt(s.chi1_t.imag()) << ',' << fmt(s.chi3_p.real()) << ','
      << fmt(s.chi3_p.imag()) << ',' << fmt(s.chi3_t.real()) << ',' << fmt(s.chi3_t.imag()) << ','
      << fmt(ap) << ',' << fmt(at) << '\n';
  return row.str();
}

const char* kSusceptibilityCsvHeader =
    "# columns: param, Re(chi1_p), Im(chi1_p), Re(chi1_t), Im(chi1_t), "
    "Re(chi3_p), Im(chi3_p), Re(chi3_t), Im(chi3_t), alpha_p, alpha_t\n"
    "# units: chi dimensionless (SI form), chi3 per (gamma-unit Rabi)^2, "
    "alpha = intensity attenuation exponents (dimensionless)\n";

json gate_record(const RunConfig& cfg, Convention conv) {
  const GateTruthTable t =
      truth_table(cfg.atom, cfg.fields, cfg.medium, cfg.pulse_p, cfg.pulse_t, conv);
  auto entry = [](const GateEntry& e) {
    return json{{"total", e.total},
                {"vacuum", e.vacuum},
                {"linear", e.linear},
                {"nonlinear", e.nonlinear}};
  };
  return json{{"convention", to_string(conv)},
              {"truth_table",
               {{"probe_sigma-_trigger_sigma-", entry(t.mm)},
                {"probe_sigma-_trigger_sigma+", entry(t.mp)},
                {"probe_sigma+_trigger_sigma+", entry(t.pp)},
                {"probe_sigma+_trigger_sigma-", entry(t.pm)}}},
              {"phase_shifts",
               {{"phi0_p", t.shifts.phi0_p},
                {"phi0_t", t.shifts.phi0_t},
                {"phi_lin_p", t.shifts.phi_lin_p},
                {"phi_lin_t", t.shifts.phi_lin_t},
                {"phi_nlin_p", t.shifts.phi_nlin_p},
                {"phi_nlin_t", t.shifts.phi_nlin_t}}},
              {"conditional_phase", conditional_phase(t)}};
}

int dispatch(CLI::App& app, const std::function<int()>& body) {
  (void)app;
  try {
    return body();
  } catch (const DomainError& e) {
    std::cout << dump(json{{"error", {{"type", "domain"}, {"message", e.what()}}}});
    return kExitDomain;
  } catch (const NumericalError& e) {
    std::cout << dump(json{{"error", {{"type", "numerical"}, {"message", e.what()}}}});
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cout << dump(json{{"error", {{"type", "config"}, {"message", e.what()}}}});
    return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tripod atom cross-Kerr phase gate simulator"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  std::string config_path;
  Output out;
  std::string convention_flag;
  std::optional<std::uint64_t> seed_flag;

  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--out", out.path, "output file (default stdout)");
  app.add_option("--format", out.format, "csv|json")->default_val("json");
  app.add_option("--convention", convention_flag, "si|gaussian (overrides config)");
  app.add_option("--seed", seed_flag, "PRNG seed (overrides config)");

  auto* cmd_dressed = app.add_subcommand("dressed", "eigensystem of the interaction Hamiltonian");
  auto* cmd_steady = app.add_subcommand("bloch-steady", "stationary density matrix");
  auto* cmd_evolve = app.add_subcommand("bloch-evolve", "master-equation trajectory CSV");
  Real ev_tfinal = 100.0, ev_dt = 0.01;
  int ev_stride = 100;
  cmd_evolve->add_option("--t-final", ev_tfinal, "final time, 1/gamma units");
  cmd_evolve->add_option("--dt", ev_dt, "step, 1/gamma units");
  cmd_evolve->add_option("--stride", ev_stride, "sampling stride");

  auto* cmd_susc = app.add_subcommand("susceptibility", "chi1/chi3 record or parameter scan");
  std::string scan_param;
  Real scan_from = 0, scan_to = 0;
  int scan_count = 0;
  cmd_susc->add_option("--scan", scan_param, "parameter path to scan");
  cmd_susc->add_option("--from", scan_from, "scan start");
  cmd_susc->add_option("--to", scan_to, "scan end");
  cmd_susc->add_option("--count", scan_count, "scan points");

  auto* cmd_coeffs = app.add_subcommand("coeffs", "slow-light propagation coefficients");

  auto* cmd_prop = app.add_subcommand("propagate", "split-step envelope propagation CSV");
  int pr_nt = 256, pr_nz = 400, pr_snapshots = 4;
  Real pr_window = 0.0;
  bool pr_no_loss = false, pr_no_dispersion = false;
  cmd_prop->add_option("--nt", pr_nt, "time samples");
  cmd_prop->add_option("--nz", pr_nz, "z steps");
  cmd_prop->add_option("--snapshots", pr_snapshots, "interior snapshots");
  cmd_prop->add_option("--window", pr_window, "time window, s (default 10 max tau)");
  cmd_prop->add_flag("--no-loss", pr_no_loss, "drop the kappa terms");
  cmd_prop->add_flag("--no-dispersion", pr_no_dispersion, "drop the beta terms");

  auto* cmd_quantum = app.add_subcommand("quantum-phase", "quantized-field phase shifts");
  auto* cmd_gate = app.add_subcommand("gate", "truth table and conditional phase");
  auto* cmd_mc = app.add_subcommand("gate-mc", "Monte Carlo intensity-noise gate error");
  Real mc_level = -1.0;
  int mc_samples = 0;
  cmd_mc->add_option("--level", mc_level, "relative intensity fluctuation std");
  cmd_mc->add_option("--samples", mc_samples, "number of samples");

  auto* cmd_fig2 = app.add_subcommand("fig2", "scaled absorption vs dephasing CSV");
  int f2_points = 51;
  Real f2_max = 0.1;
  cmd_fig2->add_option("--points", f2_points, "scan points");
  cmd_fig2->add_option("--gd-max", f2_max, "dephasing range, gamma units");

  auto* cmd_sweep = app.add_subcommand("sweep", "sweep one parameter, CSV of gate observables");
  std::string sw_param;
  Real sw_from = 0, sw_to = 0;
  int sw_count = 1;
  cmd_sweep->add_option("--param", sw_param, "parameter path")->required();
  cmd_sweep->add_option("--from", sw_from, "start value")->required();
  cmd_sweep->add_option("--to", sw_to, "end value")->required();
  cmd_sweep->add_option("--count", sw_count, "number of points")->required();

  CLI11_PARSE(app, argc, argv);

  return dispatch(app, [&]() -> int {
    RunConfig cfg;
    if (!config_path.empty()) {
      cfg = load_config(config_path);
    } else {
      // Built-in defaults: resonant tripod with the strong-pump working point.
      cfg.fields.omega_p = 1.0;
      cfg.fields.omega_t = 1.0;
      cfg.fields.omega_pump = 4.5;
      cfg.medium = MediumParams{3e18,     7e-3,    795e-9, 795e-9, 2.537e-29,
                                2.537e-29, 3.42e6, 3.42e6, 2.1e8};
      cfg.pulse_p = PulseSpec{cfg.fields.omega_p, 1e-6, Beam::Probe};
      cfg.pulse_t = PulseSpec{cfg.fields.omega_t, 1e-6, Beam::Trigger};
    }
    if (!convention_flag.empty())
      cfg.convention = (convention_flag == "si" || convention_flag == "SI") ? Convention::SI
                                                                            : Convention::GAUSSIAN;
    if (seed_flag) {
      cfg.seed = *seed_flag;
      cfg.noise.seed = *seed_flag;
    }

    if (*cmd_dressed) {
      const auto h = interaction_hamiltonian(cfg.fields, cfg.atom);
      const auto states = eigensystem(h);
      if (out.format == "csv") {
        std::ostringstream csv;
        csv << "# columns: energy(gamma), re_a0, im_a0, re_a1, im_a1, re_a2, im_a2, re_a3, im_a3, "
               "is_dark\n";
        for (const auto& s : states) {
          csv << fmt(s.energy);
          for (int i = 0; i < 4; ++i)
            csv << ',' << fmt(s.amplitudes[i].real()) << ',' << fmt(s.amplitudes[i].imag());
          csv << ',' << (s.is_dark ? 1 : 0) << '\n';
        }
        out.emit(csv.str());
      } else {
        json js = json::array();
        for (const auto& s : states) {
          json amps = json::array();
          for (int i = 0; i < 4; ++i) amps.push_back(cjson(s.amplitudes[i]));
          js.push_back({{"energy", s.energy}, {"amplitudes", amps}, {"is_dark", s.is_dark}});
        }
        out.emit(dump(json{{"eigenstates", js}}));
      }
      return 0;
    }

    if (*cmd_steady) {
      const Matrix4c rho = steady_state(cfg.atom, cfg.fields);
      json re = json::array(), im = json::array();
      for (int i = 0; i < 4; ++i) {
        json rr = json::array(), ri = json::array();
        for (int j = 0; j < 4; ++j) {
          rr.push_back(rho(i, j).real());
          ri.push_back(rho(i, j).imag());
        }
        re.push_back(rr);
        im.push_back(ri);
      }
      out.emit(dump(json{{"rho_re", re}, {"rho_im", im}}));
      return 0;
    }

    if (*cmd_evolve) {
      Matrix4c rho0 = Matrix4c::Zero();
      rho0(1, 1) = 0.5;
      rho0(3, 3) = 0.5;
      const Trajectory traj = time_evolve(cfg.atom, cfg.fields, rho0, ev_tfinal, ev_dt, ev_stride);
      std::ostringstream csv;
      csv << "# columns: t(1/gamma), then re/im of rho(i,j) row-major\n";
      for (std::size_t s = 0; s < traj.t.size(); ++s) {
        csv << fmt(traj.t[s]);
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            csv << ',' << fmt(traj.rho[s](i, j).real()) << ',' << fmt(traj.rho[s](i, j).imag());
        csv << '\n';
      }
      out.emit(csv.str());
      return 0;
    }

    if (*cmd_susc) {
      if (scan_param.empty()) {
        out.emit(dump(susceptibility_record(cfg)));
        return 0;
      }
      if (!is_sweepable(scan_param))
        throw std::invalid_argument("not a sweepable parameter: " + scan_param);
      if (scan_count < 1) throw std::invalid_argument("susceptibility --scan needs --count >= 1");
      std::ostringstream csv;
      csv << kSusceptibilityCsvHeader;
      for (int i = 0; i < scan_count; ++i) {
        RunConfig c = cfg;
        const Real v =
            scan_count == 1 ? scan_from
                            : scan_from + (scan_to - scan_from) * i / Real(scan_count - 1);
        set_parameter(c, scan_param, v);
        csv << susceptibility_csv_row(c, v);
      }
      out.emit(csv.str());
      return 0;
    }

    if (*cmd_coeffs) {
      const PropagationCoeffs c = coefficients(cfg.atom, cfg.fields, cfg.medium);
      out.emit(dump(json{{"ng_p", cjson(c.ng_p)},
                         {"ng_t", cjson(c.ng_t)},
                         {"vg_p_m_per_s", c.vg_p},
                         {"vg_t_m_per_s", c.vg_t},
                         {"dwtr_p_rad_per_s", c.dwtr_p},
                         {"dwtr_t_rad_per_s", c.dwtr_t},
                         {"beta_p_s2_per_m", cjson(c.beta_p)},
                         {"beta_t_s2_per_m", cjson(c.beta_t)},
                         {"kappa_p_per_m", cjson(c.kappa_p)},
                         {"kappa_t_per_m", cjson(c.kappa_t)},
                         {"eta_p_s_per_m", cjson(c.eta_p)},
                         {"eta_t_s_per_m", cjson(c.eta_t)},
                         {"anomalous_dispersion_p", c.anomalous_p},
                         {"anomalous_dispersion_t", c.anomalous_t}}));
      return 0;
    }

    if (*cmd_prop) {
      const StepRates rates = physical_step_rates(cfg.atom, cfg.fields, cfg.medium, cfg.convention);
      const Real window = pr_window > 0 ? pr_window : 10.0 * std::max(cfg.pulse_p.tau, cfg.pulse_t.tau);
      GridOptions grid{pr_nt, window, pr_nz, pr_snapshots};
      VectorXc ep(pr_nt), et(pr_nt);
      for (int k = 0; k < pr_nt; ++k) {
        const Real t = (k - pr_nt / 2) * window / pr_nt;
        ep[k] = cfg.pulse_p.peak_rabi * std::exp(-t * t / (cfg.pulse_p.tau * cfg.pulse_p.tau));
        et[k] = cfg.pulse_t.peak_rabi * std::exp(-t * t / (cfg.pulse_t.tau * cfg.pulse_t.tau));
      }
      PropagationFlags flags{!pr_no_loss, !pr_no_dispersion};
      const EnvelopeGrid g = propagate(rates, ep, et, grid, cfg.medium.length, flags);
      std::ostringstream csv;
      csv << "# columns: z(m), t_retarded(s), Re(E_p), Im(E_p), Re(E_t), Im(E_t) "
             "(envelopes in gamma-unit Rabi frequencies)\n";
      for (std::size_t s = 0; s < g.z.size(); ++s)
        for (int k = 0; k < g.t.size(); ++k)
          csv << fmt(g.z[s]) << ',' << fmt(g.t[k]) << ',' << fmt(g.e_p[s][k].real()) << ','
              << fmt(g.e_p[s][k].imag()) << ',' << fmt(g.e_t[s][k].real()) << ','
              << fmt(g.e_t[s][k].imag()) << '\n';
      out.emit(csv.str());
      return 0;
    }

    if (*cmd_quantum) {
      const Real dw = default_delta_omega(cfg);
      const QuantumPhases q = quantum_phase(cfg.atom, cfg.fields, cfg.medium, dw);
      CoherentInput in = cfg.quantum;
      in.delta_omega = dw;
      const QuantumPhaseResult r = coherent_expectation(in, q.phi_p, q.phi_t);
      out.emit(dump(json{{"delta_omega_rad_per_s", dw},
                         {"phi_p", q.phi_p},
                         {"phi_t", q.phi_t},
                         {"nonlinear_absorption_p", q.absorption_p},
                         {"nonlinear_absorption_t", q.absorption_t},
                         {"mean_e_p", cjson(r.mean_e_p)},
                         {"mean_e_t", cjson(r.mean_e_t)},
                         {"damping_p", r.damping_p},
                         {"damping_t", r.damping_t}}));
      return 0;
    }

    if (*cmd_gate) {
      json js = gate_record(cfg, cfg.convention);
      const Real phi_g = conditional_phase(
          truth_table(cfg.atom, cfg.fields, cfg.medium, cfg.pulse_p, cfg.pulse_t,
                      Convention::GAUSSIAN));
      const Real phi_si = conditional_phase(
          truth_table(cfg.atom, cfg.fields, cfg.medium, cfg.pulse_p, cfg.pulse_t, Convention::SI));
      js["conditional_phase_gaussian"] = phi_g;
      js["conditional_phase_si"] = phi_si;
      js["convention_multiplier"] = phi_g / phi_si;
      out.emit(dump(js));
      return 0;
    }

    if (*cmd_mc) {
      NoiseModel noise = cfg.noise;
      if (mc_level >= 0.0) noise.level = mc_level;
      if (mc_samples > 0) noise.samples = mc_samples;
      const McResult r = gate_error_mc(noise, cfg.atom, cfg.fields, cfg.medium, cfg.pulse_p,
                                       cfg.pulse_t, cfg.convention);
      if (out.format == "csv") {
        // histogram of conditional-phase deviations
        constexpr int bins = 41;
        const Real lo = r.dphi_quantiles[0] - 2.0 * r.dphi_std;
        const Real hi = r.dphi_quantiles[4] + 2.0 * r.dphi_std;
        std::vector<int> counts(bins, 0);
        for (Real d : r.dphi) {
          int b = static_cast<int>((d - lo) / (hi - lo) * bins);
          b = std::clamp(b, 0, bins - 1);
          ++counts[b];
        }
        std::ostringstream csv;
        csv << "# mean_error=" << fmt(r.mean_error) << " sem=" << fmt(r.sem)
            << " dphi_std=" << fmt(r.dphi_std) << "\n# columns: bin_lo(rad), bin_hi(rad), count\n";
        for (int b = 0; b < bins; ++b)
          csv << fmt(lo + (hi - lo) * b / bins) << ',' << fmt(lo + (hi - lo) * (b + 1) / bins)
              << ',' << counts[b] << '\n';
        out.emit(csv.str());
      } else {
        out.emit(dump(json{{"level", noise.level},
                           {"samples", noise.samples},
                           {"seed", noise.seed},
                           {"conditional_phase_noiseless", r.conditional_noiseless},
                           {"mean_error", r.mean_error},
                           {"sem", r.sem},
                           {"mean_error_uncorrected", r.mean_error_uncorrected},
                           {"dphi_std", r.dphi_std},
                           {"dphi_quantiles_5_25_50_75_95",
                            {r.dphi_quantiles[0], r.dphi_quantiles[1], r.dphi_quantiles[2],
                             r.dphi_quantiles[3], r.dphi_quantiles[4]}},
                           {"failed_samples", r.failed_samples}}));
      }
      return 0;
    }

    if (*cmd_fig2) {
      AtomParams atom = cfg.atom;
      atom.delta1 = atom.delta2 = atom.delta3 = 0.0;  // transparency-window center
      FieldParams fields = cfg.fields;
      if (config_path.empty()) {
        fields.omega_p = fields.omega_t = 1.0;
        fields.omega_pump = 4.5;
      }
      const auto curve = absorption_scan(f2_max, f2_points, atom, fields, cfg.medium);
      std::ostringstream csv;
      csv << "# columns: gamma_d(gamma units), scaled probe absorption at window center\n";
      for (const auto& [gd, a] : curve) csv << fmt(gd) << ',' << fmt(a) << '\n';
      out.emit(csv.str());
      return 0;
    }

    if (*cmd_sweep) {
      if (!is_sweepable(sw_param))
        throw std::invalid_argument("not a sweepable parameter: " + sw_param);
      if (sw_count < 1) throw std::invalid_argument("sweep: --count must be >= 1");
      std::ostringstream csv;
      csv << "# sweep of " << sw_param << "\n"
          << kSusceptibilityCsvHeader
          << "# extra columns: phi_nlin_p, phi_nlin_t, conditional_phase (radians, "
          << to_string(cfg.convention) << " convention)\n";
      for (int i = 0; i < sw_count; ++i) {
        RunConfig c = cfg;
        const Real v =
            sw_count == 1 ? sw_from : sw_from + (sw_to - sw_from) * i / Real(sw_count - 1);
        set_parameter(c, sw_param, v);
        std::string row = susceptibility_csv_row(c, v);
        row.pop_back();  // newline
        const GateTruthTable t =
            truth_table(c.atom, c.fields, c.medium, c.pulse_p, c.pulse_t, c.convention);
        csv << row << ',' << fmt(t.shifts.phi_nlin_p) << ',' << fmt(t.shifts.phi_nlin_t) << ','
            << fmt(conditional_phase(t)) << '\n';
      }
      out.emit(csv.str());
      return 0;
    }

    return 0;
  });
}
