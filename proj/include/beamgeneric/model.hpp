#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "beamgeneric/operators.hpp"
#include "beamgeneric/state.hpp"

namespace beamgeneric {

enum class ModelId {
  TimoshenkoUndamped,
  TimoshenkoFrictional,
  TimoshenkoHeatI,
  TimoshenkoHeatII,
  TimoshenkoHeatIII,
  TimoshenkoNew,
  BresseUndamped,
  BresseFrictional,
  BresseHeatI,
  BresseHeatII,
};

const std::vector<ModelId>& all_model_ids();
std::string_view to_string(ModelId id);
/// Accepts the CamelCase id ("BresseHeatI") or the kebab form
/// ("bresse-heat1"), case-insensitively.
std::optional<ModelId> parse_model_id(std::string_view text);

bool is_bresse(ModelId id);
/// True for every model with a dissipative part.
bool is_damped(ModelId id);

/// Material, friction and heat-conduction constants. Defaults are all one.
struct ModelParams {
  double k = 1, b = 1, k0 = 1, l = 1;
  double delta1 = 1, delta2 = 1;
  double gamma1 = 1, gamma2 = 1, gamma3 = 1;
  double gamma = 1, delta = 1, beta = 1, kappa = 1, kappa1 = 1, kappa2 = 1, K = 1;
  double alpha = 1;

  static const std::vector<std::string>& names();
  /// Throws ValidationError for an unknown name.
  void set(std::string_view name, double value);
  double get(std::string_view name) const;

  /// Throws ValidationError listing every violated constraint.
  void validate(ModelId id) const;
};

/// The building blocks {Z, L, M, E, S} of one beam model on a fixed grid,
/// plus an independent hand transcription of its evolution equations.
class Model {
 public:
  Model(ModelId id, ModelParams params, LayoutPtr layout)
      : id_(id), params_(params), layout_(std::move(layout)) {}
  virtual ~Model() = default;

  ModelId id() const noexcept { return id_; }
  const ModelParams& params() const noexcept { return params_; }
  const LayoutPtr& layout() const noexcept { return layout_; }
  const Grid& grid() const noexcept { return layout_->grid(); }

  virtual double energy(const State& z) const = 0;
  virtual double entropy(const State& z) const = 0;
  virtual Cotangent grad_energy(const State& z) const = 0;
  virtual Cotangent grad_entropy(const State& z) const = 0;
  /// Poisson operator L(z).
  virtual BlockOperator poisson(const State& z) const = 0;
  /// Dissipative operator M(z) in factored form.
  virtual FactoredDissipator dissipator(const State& z) const = 0;
  /// M(z) assembled block by block as written for the reservoir models; empty
  /// when no such literal form exists.
  virtual std::optional<BlockOperator> block_dissipator(const State&) const {
    return std::nullopt;
  }
  /// The first-order PDE system transcribed directly, without L, M or gradients.
  virtual Tangent direct_rhs(const State& z) const = 0;
  /// Energy with the reservoir (or the linear thermal term) removed.
  virtual double mech_energy(const State& z) const = 0;
  /// Largest stable RK4 step for this model's stiffest terms.
  virtual double dt_bound() const = 0;
  /// True when S = integral of log(theta); theta must then stay positive.
  virtual bool log_entropy() const { return false; }

  /// Throws StructuralError if z is not laid out for this model.
  void require_layout(const SlotVector& z) const;

 private:
  ModelId id_;
  ModelParams params_;
  LayoutPtr layout_;
};

using ModelPtr = std::shared_ptr<const Model>;

}  // namespace beamgeneric
