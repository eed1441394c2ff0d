#include <algorithm>
#include <cmath>
#include <string>

#include "beamgeneric/engine.hpp"
#include "beamgeneric/errors.hpp"

namespace beamgeneric {

namespace {

std::size_t slot_index(const StateLayout& layout, const Slot& s) {
  if (s.is_reservoir) return layout.field_order().size();
  const auto& order = layout.field_order();
  return static_cast<std::size_t>(std::find(order.begin(), order.end(), s.name) - order.begin());
}

void check_scales(const StateLayout& layout, std::span<const double> scales) {
  const std::size_t slots = layout.field_order().size() + (layout.has_reservoir() ? 1 : 0);
  if (scales.size() != slots) {
    throw StructuralError("transform needs " + std::to_string(slots) + " slot scales, got " +
                          std::to_string(scales.size()));
  }
  for (double t : scales) {
    if (t == 0.0 || !std::isfinite(t)) throw StructuralError("transform is singular");
  }
}

// Multiplies slot i of v by scales[i]^power.
template <class V>
V rescale(const V& v, std::span<const double> scales, int power) {
  const StateLayout& layout = v.layout();
  V out = v;
  const auto& order = layout.field_order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const double f = std::pow(scales[i], power);
    for (double& x : out.field(order[i])) x *= f;
  }
  if (layout.has_reservoir()) out.set_reservoir(out.reservoir() * std::pow(scales.back(), power));
  return out;
}

class ScaledModel final : public Model {
 public:
  ScaledModel(ModelPtr inner, std::vector<double> scales)
      : Model(inner->id(), inner->params(), inner->layout()),
        inner_(std::move(inner)),
        scales_(std::move(scales)) {}

  double energy(const State& zb) const override { return inner_->energy(original(zb)); }
  double entropy(const State& zb) const override { return inner_->entropy(original(zb)); }
  double mech_energy(const State& zb) const override {
    return inner_->mech_energy(original(zb));
  }

  Cotangent grad_energy(const State& zb) const override {
    return rescale(inner_->grad_energy(original(zb)), scales_, -1);
  }
  Cotangent grad_entropy(const State& zb) const override {
    return rescale(inner_->grad_entropy(original(zb)), scales_, -1);
  }

  BlockOperator poisson(const State& zb) const override {
    BlockOperator L = inner_->poisson(original(zb));
    const StateLayout& lay = *layout();
    for (Block& b : L.blocks()) {
      b.kind = scaled(b.kind, scales_[slot_index(lay, b.row)] * scales_[slot_index(lay, b.col)]);
    }
    return L;
  }

  FactoredDissipator dissipator(const State& zb) const override {
    FactoredDissipator M = inner_->dissipator(original(zb));
    const StateLayout& lay = *layout();
    for (FactoredRow& row : M.rows()) {
      for (auto& [slot, kind] : row.terms) kind = scaled(kind, scales_[slot_index(lay, slot)]);
    }
    return M;
  }

  Tangent direct_rhs(const State& zb) const override {
    return rescale(inner_->direct_rhs(original(zb)), scales_, 1);
  }

  double dt_bound() const override { return inner_->dt_bound(); }
  bool log_entropy() const override { return inner_->log_entropy(); }

 private:
  State original(const State& zb) const { return rescale(zb, scales_, -1); }

  ModelPtr inner_;
  std::vector<double> scales_;
};

}  // namespace

ModelPtr make_scaled_model(ModelPtr model, std::vector<double> slot_scales) {
  check_scales(*model->layout(), slot_scales);
  return std::make_shared<ScaledModel>(std::move(model), std::move(slot_scales));
}

State scale_state(const State& z, std::span<const double> slot_scales) {
  check_scales(z.layout(), slot_scales);
  return rescale(z, slot_scales, 1);
}

double transform_check(const ModelPtr& model, std::span<const double> slot_scales,
                       const State& z0, const IntegratorConfig& cfg) {
  const ModelPtr scaled_model =
      make_scaled_model(model, std::vector<double>(slot_scales.begin(), slot_scales.end()));

  std::vector<State> original;
  integrate(*model, z0, cfg, [&](long, double, const State& z) { original.push_back(z); });

  double worst = 0.0;
  std::size_t sample = 0;
  integrate(*scaled_model, scale_state(z0, slot_scales), cfg,
            [&](long, double, const State& zb) {
              const State tz = scale_state(original.at(sample++), slot_scales);
              auto a = tz.flat();
              auto b = zb.flat();
              for (std::size_t i = 0; i < a.size(); ++i) {
                worst = std::max(worst, std::abs(a[i] - b[i]));
              }
            });
  return worst;
}

}  // namespace beamgeneric
