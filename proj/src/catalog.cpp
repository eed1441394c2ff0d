#include "beamgeneric/catalog.hpp"

#include <cmath>
#include <numbers>

#include "beamgeneric/errors.hpp"
#include "models/bresse.hpp"
#include "models/timoshenko.hpp"

namespace beamgeneric {

using F = FieldName;

LayoutPtr make_layout(ModelId id, const Grid& grid) {
  std::vector<FieldName> fields;
  if (is_bresse(id)) {
    fields = {F::phi, F::psi, F::chi, F::p, F::q, F::w};
  } else {
    fields = {F::phi, F::psi, F::p, F::q};
  }
  switch (id) {
    case ModelId::TimoshenkoHeatI:
    case ModelId::TimoshenkoNew:
    case ModelId::BresseHeatI:
      fields.push_back(F::theta);
      break;
    case ModelId::TimoshenkoHeatII:
      fields.insert(fields.end(), {F::theta, F::s});
      break;
    case ModelId::TimoshenkoHeatIII:
      fields.insert(fields.end(), {F::theta, F::w});
      break;
    case ModelId::BresseHeatII:
      fields.insert(fields.end(), {F::theta, F::eta});
      break;
    default:
      break;
  }
  return std::make_shared<const StateLayout>(grid, std::move(fields),
                                             id != ModelId::TimoshenkoNew);
}

ModelPtr build_model(ModelId id, const ModelParams& params, const Grid& grid) {
  params.validate(id);
  auto layout = make_layout(id, grid);
  if (is_bresse(id)) return std::make_shared<detail::BresseModel>(id, params, std::move(layout));
  return std::make_shared<detail::TimoshenkoModel>(id, params, std::move(layout));
}

State default_initial_state(ModelId id, const Grid& grid, int mode, double amplitude) {
  if (mode < 1) throw PreconditionError("initial mode must be >= 1");
  State z(make_layout(id, grid));
  const double wavenumber = 2.0 * std::numbers::pi * mode / grid.length();
  auto phi = z.field(F::phi);
  auto psi = z.field(F::psi);
  for (int i = 0; i < grid.n(); ++i) {
    const double arg = wavenumber * grid.x(i);
    phi[i] = amplitude * std::sin(arg);
    psi[i] = amplitude * std::cos(arg);
  }
  if (z.layout().contains(F::chi)) {
    auto chi = z.field(F::chi);
    for (int i = 0; i < grid.n(); ++i) {
      chi[i] = amplitude * std::sin(wavenumber * grid.x(i) + std::numbers::pi / 3.0);
    }
  }
  if (id == ModelId::TimoshenkoNew) {
    auto th = z.field(F::theta);
    std::fill(th.begin(), th.end(), 1.0);
  }
  return z;
}

}  // namespace beamgeneric
