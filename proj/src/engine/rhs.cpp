#include <cmath>
#include <string>

#include "beamgeneric/engine.hpp"
#include "beamgeneric/errors.hpp"
#include "engine/internal.hpp"

namespace beamgeneric {

namespace {

void require_cotangent(const Model& model, const State& z, const Cotangent& xi) {
  model.require_layout(z);
  model.require_layout(xi);
}

Tangent sum(Tangent a, const Tangent& b) {
  auto fa = a.flat();
  auto fb = b.flat();
  for (std::size_t i = 0; i < fa.size(); ++i) fa[i] += fb[i];
  return a;
}

State rk4(const Model& model, const State& z, double dt) {
  const Tangent k1 = generic_rhs(model, z);
  const Tangent k2 = generic_rhs(model, advance(z, 0.5 * dt, k1));
  const Tangent k3 = generic_rhs(model, advance(z, 0.5 * dt, k2));
  const Tangent k4 = generic_rhs(model, advance(z, dt, k3));
  std::vector<double> out(z.flat().begin(), z.flat().end());
  const double c = dt / 6.0;
  auto a = k1.flat(), b = k2.flat(), d = k3.flat(), e = k4.flat();
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] += c * (a[i] + 2.0 * b[i] + 2.0 * d[i] + e[i]);
  }
  return State(z.layout_ptr(), std::move(out));
}

}  // namespace

namespace detail {
// Unchecked step (negative dt allowed); used for backward probes.
State rk4_step(const Model& model, const State& z, double dt) { return rk4(model, z, dt); }
}  // namespace detail

Tangent apply_L(const Model& model, const State& z, const Cotangent& xi) {
  require_cotangent(model, z, xi);
  return model.poisson(z).apply(xi);
}

Tangent apply_M(const Model& model, const State& z, const Cotangent& xi) {
  require_cotangent(model, z, xi);
  return model.dissipator(z).apply(xi);
}

FactoredDissipator factored_M(const Model& model, const State& z) {
  model.require_layout(z);
  return model.dissipator(z);
}

Tangent generic_rhs(const Model& model, const State& z) {
  model.require_layout(z);
  Tangent reversible = model.poisson(z).apply(model.grad_energy(z));
  const FactoredDissipator M = model.dissipator(z);
  if (M.empty()) return reversible;
  return sum(std::move(reversible), M.apply(model.grad_entropy(z)));
}

Tangent direct_rhs(const Model& model, const State& z) {
  model.require_layout(z);
  return model.direct_rhs(z);
}

State step_rk4(const Model& model, const State& z, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw PreconditionError("time step must be positive and finite, got " + std::to_string(dt));
  }
  model.require_layout(z);
  return rk4(model, z, dt);
}

}  // namespace beamgeneric
