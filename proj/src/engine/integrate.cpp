#include <cmath>
#include <string>

#include "beamgeneric/engine.hpp"
#include "beamgeneric/errors.hpp"
#include "beamgeneric/functionals.hpp"
#include "engine/internal.hpp"

namespace beamgeneric {

DiagnosticsRecord diagnose(const Model& model, double t, const State& z) {
  model.require_layout(z);
  DiagnosticsRecord r;
  r.t = t;
  r.energy = model.energy(z);
  r.entropy = model.entropy(z);
  r.mech_energy = model.mech_energy(z);
  const Cotangent dE = model.grad_energy(z);
  const Cotangent dS = model.grad_entropy(z);
  r.res_LdS = max_abs(model.poisson(z).apply(dS).flat());
  r.res_MdE = max_abs(model.dissipator(z).apply(dE).flat());
  r.theta_min = theta_min(z).value_or(0.0);
  return r;
}

std::vector<DiagnosticsRecord> integrate(const Model& model, const State& z0,
                                         const IntegratorConfig& cfg,
                                         const StepObserver& observer) {
  model.require_layout(z0);
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
    throw PreconditionError("dt must be positive and finite, got " + std::to_string(cfg.dt));
  }
  if (!(cfg.t_end >= cfg.dt) || !std::isfinite(cfg.t_end)) {
    throw PreconditionError("t_end must be finite and >= dt");
  }
  if (cfg.record_every < 1) throw PreconditionError("record_every must be >= 1");
  const double bound = model.dt_bound();
  if (cfg.dt > bound * (1.0 + 1e-12)) {
    throw PreconditionError("dt = " + std::to_string(cfg.dt) + " exceeds the stability bound " +
                            std::to_string(bound) + " of " + std::string(to_string(model.id())));
  }

  const long steps = std::lround(cfg.t_end / cfg.dt);
  std::vector<DiagnosticsRecord> records;
  records.reserve(static_cast<std::size_t>(steps / cfg.record_every + 2));

  auto record = [&](long step, const State& z) {
    const double t = static_cast<double>(step) * cfg.dt;
    records.push_back(diagnose(model, t, z));
    if (observer) observer(step, t, z);
  };

  State z = z0;
  record(0, z);
  for (long step = 1; step <= steps; ++step) {
    z = detail::rk4_step(model, z, cfg.dt);
    for (double v : z.flat()) {
      if (!std::isfinite(v)) {
        throw DivergenceError("non-finite state value at step " + std::to_string(step), step);
      }
    }
    if (model.log_entropy()) {
      for (double th : z.field(FieldName::theta)) {
        if (!(th > 0.0)) {
          throw DomainError("theta became nonpositive at step " + std::to_string(step));
        }
      }
    }
    if (step % cfg.record_every == 0 || step == steps) record(step, z);
  }
  return records;
}

}  // namespace beamgeneric
