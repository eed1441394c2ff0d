#include "beamgeneric/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <vector>

#include "beamgeneric/catalog.hpp"
#include "beamgeneric/errors.hpp"

namespace beamgeneric {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text, int line) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ValidationError("line " + std::to_string(line) + ": bad value '" + text +
                          "' for key '" + key + "'");
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) {
      throw ValidationError("line " + std::to_string(line) + ": non-finite value for '" + key +
                            "'");
    }
  }
  return value;
}

}  // namespace

RunConfig parse_run_config(std::istream& in) {
  RunConfig cfg;
  bool have_model = false;
  std::vector<std::string> unknown;
  const auto& param_names = ModelParams::names();

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string text = trim(raw);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("line " + std::to_string(line) + ": expected 'key = value'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ValidationError("line " + std::to_string(line) + ": empty key or value");
    }

    if (key == "model") {
      const auto id = parse_model_id(value);
      if (!id) throw ValidationError("unknown model '" + value + "'");
      cfg.model = *id;
      have_model = true;
    } else if (key == "n") {
      cfg.n = parse_number<int>(key, value, line);
    } else if (key == "length") {
      cfg.length = parse_number<double>(key, value, line);
    } else if (key == "dt") {
      cfg.dt = parse_number<double>(key, value, line);
    } else if (key == "t_end") {
      cfg.t_end = parse_number<double>(key, value, line);
    } else if (key == "record_every") {
      cfg.record_every = parse_number<int>(key, value, line);
    } else if (key == "seed") {
      cfg.seed = parse_number<std::uint64_t>(key, value, line);
    } else if (key == "mode") {
      cfg.mode = parse_number<int>(key, value, line);
    } else if (key == "amplitude") {
      cfg.amplitude = parse_number<double>(key, value, line);
    } else if (key == "perturbation") {
      cfg.perturbation = parse_number<double>(key, value, line);
    } else if (key == "output") {
      cfg.output = value;
    } else if (std::find(param_names.begin(), param_names.end(), key) != param_names.end()) {
      cfg.params.set(key, parse_number<double>(key, value, line));
    } else {
      unknown.push_back(key);
    }
  }
  if (!unknown.empty()) {
    std::string msg = "unknown config key(s):";
    for (const auto& k : unknown) msg += " " + k;
    throw ValidationError(msg);
  }
  if (!have_model) throw ValidationError("config is missing the 'model' key");
  if (cfg.perturbation < 0) throw ValidationError("perturbation must be >= 0");
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path.string() + "'");
  return parse_run_config(in);
}

RunSetup prepare_run(const RunConfig& cfg) {
  const Grid grid(cfg.n, cfg.length);
  ModelPtr model = build_model(cfg.model, cfg.params, grid);
  State z0 = default_initial_state(cfg.model, grid, cfg.mode, cfg.amplitude);
  if (cfg.perturbation > 0) {
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> noise(0.0, cfg.perturbation);
    for (FieldName f : z0.layout().field_order()) {
      for (double& v : z0.field(f)) v += noise(rng);
    }
  }
  IntegratorConfig integrator;
  integrator.dt = cfg.dt.value_or(std::min(1e-3, model->dt_bound()));
  integrator.t_end = cfg.t_end;
  integrator.record_every = cfg.record_every;
  return RunSetup{std::move(model), std::move(z0), integrator};
}

}  // namespace beamgeneric
