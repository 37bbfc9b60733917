#include "tripod/config.hpp"

#include <json.hpp>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

extern char** environ;

namespace tripod {

using nlohmann::json;

namespace {

Polarization parse_pol(const std::string& s) {
  if (s == "sigma+" || s == "+") return Polarization::SigmaPlus;
  if (s == "sigma-" || s == "-") return Polarization::SigmaMinus;
  throw std::invalid_argument("config: bad polarization '" + s + "'");
}

Convention parse_convention(const std::string& s) {
  if (s == "si" || s == "SI") return Convention::SI;
  if (s == "gaussian" || s == "GAUSSIAN") return Convention::GAUSSIAN;
  throw std::invalid_argument("config: bad convention '" + s + "'");
}

void apply_env_overrides(json& doc) {
  constexpr const char* prefix = "TRIPOD_";
  for (char** e = environ; e && *e; ++e) {
    const std::string entry(*e);
    if (entry.rfind(prefix, 0) != 0) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos) continue;
    std::string path = entry.substr(7, eq - 7);
    const std::string value = entry.substr(eq + 1);

    json* node = &doc;
    std::size_t pos = 0;
    while (true) {
      const auto sep = path.find("__", pos);
      const std::string key = path.substr(pos, sep == std::string::npos ? sep : sep - pos);
      if (sep == std::string::npos) {
        json parsed;
        try {
          parsed = json::parse(value);
        } catch (const json::parse_error&) {
          parsed = value;  // plain string (e.g. convention names)
        }
        (*node)[key] = parsed;
        break;
      }
      node = &(*node)[key];
      pos = sep + 2;
    }
  }
}

}  // namespace

void RunConfig::validate() const {
  atom.validate();
  fields.validate();
  medium.validate();
  pulse_p.validate();
  pulse_t.validate();
  noise.validate();
}

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
  }

  RunConfig cfg;
  const json& a = doc.at("atom");
  cfg.atom.delta1 = a.at("delta1").get<Real>();
  cfg.atom.delta2 = a.at("delta2").get<Real>();
  cfg.atom.delta3 = a.at("delta3").get<Real>();
  cfg.atom.gamma_d = a.at("gamma_d").get<Real>();
  if (doc.contains("gamma_si_rad_per_s")) cfg.atom.gamma_si = doc["gamma_si_rad_per_s"].get<Real>();

  const json& f = doc.at("fields");
  cfg.fields.omega_p = f.at("omega_p").get<Real>();
  cfg.fields.omega_t = f.at("omega_t").get<Real>();
  cfg.fields.omega_pump = f.at("omega_pump").get<Real>();
  if (f.contains("pol_p")) cfg.fields.pol_p = parse_pol(f["pol_p"].get<std::string>());
  if (f.contains("pol_t")) cfg.fields.pol_t = parse_pol(f["pol_t"].get<std::string>());

  const json& m = doc.at("medium");
  cfg.medium.density = m.at("density").get<Real>();
  cfg.medium.length = m.at("length").get<Real>();
  cfg.medium.lambda_p = m.at("lambda_p").get<Real>();
  cfg.medium.lambda_t = m.at("lambda_t").get<Real>();
  cfg.medium.dipole_p = m.at("dipole_p").get<Real>();
  cfg.medium.dipole_t = m.at("dipole_t").get<Real>();
  cfg.medium.g_p = m.at("g_p").get<Real>();
  cfg.medium.g_t = m.at("g_t").get<Real>();
  cfg.medium.n_atoms = m.at("n_atoms").get<Real>();

  cfg.pulse_p = PulseSpec{cfg.fields.omega_p, 1e-6, Beam::Probe};
  cfg.pulse_t = PulseSpec{cfg.fields.omega_t, 1e-6, Beam::Trigger};
  if (doc.contains("pulses")) {
    const json& p = doc["pulses"];
    if (p.contains("tau_p")) cfg.pulse_p.tau = p["tau_p"].get<Real>();
    if (p.contains("tau_t")) cfg.pulse_t.tau = p["tau_t"].get<Real>();
  }

  if (doc.contains("quantum")) {
    const json& q = doc["quantum"];
    if (q.contains("alpha_p")) cfg.quantum.alpha_p = Complex(q["alpha_p"].get<Real>(), 0.0);
    if (q.contains("alpha_t")) cfg.quantum.alpha_t = Complex(q["alpha_t"].get<Real>(), 0.0);
    if (q.contains("delta_omega")) cfg.quantum.delta_omega = q["delta_omega"].get<Real>();
  }

  if (doc.contains("noise")) {
    const json& n = doc["noise"];
    if (n.contains("level")) cfg.noise.level = n["level"].get<Real>();
    if (n.contains("samples")) cfg.noise.samples = n["samples"].get<int>();
  }

  if (doc.contains("convention"))
    cfg.convention = parse_convention(doc["convention"].get<std::string>());
  if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
  cfg.noise.seed = cfg.seed;

  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();

  json doc;
  try {
    doc = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
  }
  apply_env_overrides(doc);
  return parse_config(doc.dump());
}

const std::vector<std::string>& sweepable_parameters() {
  static const std::vector<std::string> paths = {
      "atom.delta1",     "atom.delta2",     "atom.delta3",     "atom.gamma_d",
      "fields.omega_p",  "fields.omega_t",  "fields.omega_pump",
      "medium.density",  "medium.length",   "pulses.tau_p",    "pulses.tau_t",
      "noise.level"};
  return paths;
}

bool is_sweepable(const std::string& path) {
  const auto& v = sweepable_parameters();
  return std::find(v.begin(), v.end(), path) != v.end();
}

namespace {
Real* parameter_slot(RunConfig& cfg, const std::string& path) {
  if (path == "atom.delta1") return &cfg.atom.delta1;
  if (path == "atom.delta2") return &cfg.atom.delta2;
  if (path == "atom.delta3") return &cfg.atom.delta3;
  if (path == "atom.gamma_d") return &cfg.atom.gamma_d;
  if (path == "fields.omega_p") return &cfg.fields.omega_p;
  if (path == "fields.omega_t") return &cfg.fields.omega_t;
  if (path == "fields.omega_pump") return &cfg.fields.omega_pump;
  if (path == "medium.density") return &cfg.medium.density;
  if (path == "medium.length") return &cfg.medium.length;
  if (path == "pulses.tau_p") return &cfg.pulse_p.tau;
  if (path == "pulses.tau_t") return &cfg.pulse_t.tau;
  if (path == "noise.level") return &cfg.noise.level;
  return nullptr;
}
}  // namespace

void set_parameter(RunConfig& cfg, const std::string& path, Real value) {
  Real* slot = parameter_slot(cfg, path);
  if (!slot) throw std::invalid_argument("unknown parameter path '" + path + "'");
  *slot = value;
  // Rabi-frequency sweeps track the corresponding pulse peaks.
  if (path == "fields.omega_p") cfg.pulse_p.peak_rabi = value;
  if (path == "fields.omega_t") cfg.pulse_t.peak_rabi = value;
}

Real get_parameter(const RunConfig& cfg, const std::string& path) {
  Real* slot = parameter_slot(const_cast<RunConfig&>(cfg), path);
  if (!slot) throw std::invalid_argument("unknown parameter path '" + path + "'");
  return *slot;
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("short write to '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

}  // namespace tripod
