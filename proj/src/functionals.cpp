#include "beamgeneric/functionals.hpp"

#include <cmath>

namespace beamgeneric {

double energy(const Model& model, const State& z) {
  model.require_layout(z);
  return model.energy(z);
}

double entropy(const Model& model, const State& z) {
  model.require_layout(z);
  return model.entropy(z);
}

Cotangent grad_energy(const Model& model, const State& z) {
  model.require_layout(z);
  return model.grad_energy(z);
}

Cotangent grad_entropy(const Model& model, const State& z) {
  model.require_layout(z);
  return model.grad_entropy(z);
}

double evaluate(const Model& model, FunctionalKind kind, const State& z) {
  return kind == FunctionalKind::energy ? energy(model, z) : entropy(model, z);
}

Cotangent gradient(const Model& model, FunctionalKind kind, const State& z) {
  return kind == FunctionalKind::energy ? grad_energy(model, z) : grad_entropy(model, z);
}

Cotangent fd_gradient(const ScalarFunctional& f, const State& z, double rel_step) {
  const auto& layout = z.layout();
  const std::size_t field_dim = layout.num_fields() * static_cast<std::size_t>(layout.grid().n());
  const double dx = layout.grid().dx();

  Cotangent g(z.layout_ptr());
  State probe = z;
  auto zp = probe.flat();
  auto out = g.flat();
  for (std::size_t i = 0; i < zp.size(); ++i) {
    const double z0 = zp[i];
    const double h = rel_step * (1.0 + std::abs(z0));
    zp[i] = z0 + h;
    const double fp = f(probe);
    zp[i] = z0 - h;
    const double fm = f(probe);
    zp[i] = z0;
    double d = (fp - fm) / (2.0 * h);
    if (i < field_dim) d /= dx;
    out[i] = d;
  }
  return g;
}

}  // namespace beamgeneric
