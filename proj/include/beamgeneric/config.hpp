#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>

#include "beamgeneric/engine.hpp"

namespace beamgeneric {

/// One simulation run as read from a flat `key = value` file.
struct RunConfig {
  ModelId model = ModelId::TimoshenkoUndamped;
  int n = 64;
  double length = 1.0;
  std::optional<double> dt;  // unset: min(1e-3, model stability bound)
  double t_end = 1.0;
  int record_every = 1;
  ModelParams params;
  std::uint64_t seed = 0;
  int mode = 1;
  double amplitude = 0.1;
  double perturbation = 0.0;  // std-dev of seeded noise added to the initial fields
  std::string output;         // empty: stdout
};

/// Throws ValidationError naming the line for malformed input and listing
/// every unknown key.
RunConfig parse_run_config(std::istream& in);
RunConfig load_run_config(const std::filesystem::path& path);

struct RunSetup {
  ModelPtr model;
  State z0;
  IntegratorConfig integrator;
};

/// Builds the model, the initial state and the integrator settings.
RunSetup prepare_run(const RunConfig& cfg);

}  // namespace beamgeneric
