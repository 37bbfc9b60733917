#pragma once

#include <string>
#include <vector>

#include "tripod/gate.hpp"
#include "tripod/quantum_phase.hpp"

namespace tripod {

struct RunConfig {
  AtomParams atom;
  FieldParams fields;
  MediumParams medium{};
  PulseSpec pulse_p{0.0, 1e-6, Beam::Probe};
  PulseSpec pulse_t{0.0, 1e-6, Beam::Trigger};
  CoherentInput quantum{Complex(1, 0), Complex(1, 0), 0.0};  // delta_omega 0 = auto
  NoiseModel noise;
  Convention convention = Convention::GAUSSIAN;
  std::uint64_t seed = 0;

  void validate() const;
};

// Parse a config JSON document (see configs/paperV.json for the schema).
RunConfig parse_config(const std::string& json_text);

// Read a config file, apply TRIPOD_* environment overrides
// (TRIPOD_<section>__<key>=<value>, e.g. TRIPOD_atom__delta1=9.5), parse.
RunConfig load_config(const std::string& path);

// Parameter paths the sweep subcommand may touch.
const std::vector<std::string>& sweepable_parameters();
bool is_sweepable(const std::string& path);
void set_parameter(RunConfig& cfg, const std::string& path, Real value);
Real get_parameter(const RunConfig& cfg, const std::string& path);

// Write content to path via a temp file + rename. Creates parent directories.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace tripod
