#include "beamgeneric/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "beamgeneric/catalog.hpp"
#include "beamgeneric/errors.hpp"

namespace beamgeneric::cli {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt3(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Maps library exceptions onto exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << '\n';
    return runtime;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return runtime;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return validation;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return validation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return runtime;
  }
}

std::string report_lines(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << to_string(r.model) << ' ' << c.name << ' ' << fmt3(c.residual) << ' '
        << fmt3(c.tolerance) << ' ' << (c.pass() ? "PASS" : "FAIL") << '\n';
  }
  return out.str();
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<DiagnosticsRecord>& records) {
  out << "t,energy,entropy,mech_energy,res_LdS,res_MdE,theta_min\n";
  for (const auto& r : records) {
    out << fmt17(r.t) << ',' << fmt17(r.energy) << ',' << fmt17(r.entropy) << ','
        << fmt17(r.mech_energy) << ',' << fmt17(r.res_LdS) << ',' << fmt17(r.res_MdE) << ','
        << fmt17(r.theta_min) << '\n';
  }
}

int cmd_simulate(const std::string& config_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = load_run_config(config_path);
    const RunSetup run = prepare_run(cfg);
    const auto records = integrate(*run.model, run.z0, run.integrator);
    if (cfg.output.empty()) {
      write_csv(out, records);
    } else {
      std::ofstream file(cfg.output);
      if (!file) throw std::runtime_error("cannot write '" + cfg.output + "'");
      write_csv(file, records);
      err << "wrote " << records.size() << " records to " << cfg.output << '\n';
    }
    return static_cast<int>(ok);
  });
}

int cmd_verify(const std::string& model, int trials, std::uint64_t seed, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    if (trials < 1) throw PreconditionError("--trials must be >= 1");
    std::vector<ModelId> ids;
    if (model == "all") {
      ids = all_model_ids();
    } else {
      const auto id = parse_model_id(model);
      if (!id) throw ValidationError("unknown model '" + model + "'");
      ids.push_back(*id);
    }
    const Grid grid(32, 1.0);
    std::vector<std::future<VerificationReport>> jobs;
    for (ModelId id : ids) {
      jobs.push_back(std::async(std::launch::async, [=] {
        const ModelPtr m = build_model(id, ModelParams{}, grid);
        return verify_model(*m, trials, seed);
      }));
    }
    bool all_pass = true;
    for (auto& job : jobs) {
      const VerificationReport r = job.get();
      out << report_lines(r);
      all_pass = all_pass && r.all_pass();
    }
    return static_cast<int>(all_pass ? ok : validation);
  });
}

int cmd_decay(const std::string& config_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = load_run_config(config_path);
    const RunSetup run = prepare_run(cfg);
    if (!is_damped(cfg.model)) {
      err << "warning: " << to_string(cfg.model)
          << " has no dissipation; the fitted rate should be near zero\n";
    }
    const auto records = integrate(*run.model, run.z0, run.integrator);
    const DecayFit fit = fit_decay(records);
    out << "model " << to_string(cfg.model) << '\n'
        << "rate " << fmt17(fit.rate) << '\n'
        << "negative_windows " << fit.negative_windows << '/' << fit.windows << '\n'
        << "confidence " << fmt17(fit.confidence) << '\n';
    return static_cast<int>(ok);
  });
}

int run(int argc, char** argv) {
  CLI::App app{"Structure-preserving simulator for damped Timoshenko and Bresse beams"};
  app.require_subcommand(1);

  std::string sim_config;
  auto* simulate = app.add_subcommand("simulate", "Integrate one model and write CSV diagnostics");
  simulate->add_option("--config", sim_config, "Run configuration file")->required();

  std::string model;
  int trials = 20;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Check the bracket axioms of one or all models");
  verify->add_option("--model", model, "Model name or 'all'")->required();
  verify->add_option("--trials", trials, "Random states (and covector pairs per state)");
  verify->add_option("--seed", seed, "RNG seed");

  std::string decay_config;
  auto* decay = app.add_subcommand("decay", "Fit the decay rate of the mechanical energy");
  decay->add_option("--config", decay_config, "Run configuration file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? static_cast<int>(ok) : static_cast<int>(validation);
  }

  if (*simulate) return cmd_simulate(sim_config, std::cout, std::cerr);
  if (*verify) return cmd_verify(model, trials, seed, std::cout, std::cerr);
  return cmd_decay(decay_config, std::cout, std::cerr);
}

}  // namespace beamgeneric::cli
