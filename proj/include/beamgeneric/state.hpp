#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beamgeneric/grid.hpp"

namespace beamgeneric {

/// Unknowns appearing in the beam models. `chi` is the longitudinal
/// displacement of the Bresse arch.
enum class FieldName { phi, psi, chi, p, q, w, theta, eta, s };

std::string_view to_string(FieldName name);
std::optional<FieldName> parse_field_name(std::string_view text);

/// Grid plus the ordered list of fields, optionally followed by the scalar
/// reservoir variable e. Flat storage is field-major: field k occupies
/// [k*n, (k+1)*n), and e (when present) is the last entry.
class StateLayout {
 public:
  StateLayout(Grid grid, std::vector<FieldName> field_order, bool has_reservoir);

  const Grid& grid() const noexcept { return grid_; }
  const std::vector<FieldName>& field_order() const noexcept { return fields_; }
  bool has_reservoir() const noexcept { return has_reservoir_; }

  std::size_t dim() const noexcept;
  std::size_t num_fields() const noexcept { return fields_.size(); }
  bool contains(FieldName name) const noexcept;
  /// Offset of the field's first value in flat storage. Throws LookupError.
  std::size_t offset(FieldName name) const;
  /// Index of e in flat storage. Throws StructuralError without a reservoir.
  std::size_t reservoir_index() const;

  bool operator==(const StateLayout& other) const noexcept {
    return grid_ == other.grid_ && fields_ == other.fields_ &&
           has_reservoir_ == other.has_reservoir_;
  }

 private:
  Grid grid_;
  std::vector<FieldName> fields_;
  bool has_reservoir_;
};

using LayoutPtr = std::shared_ptr<const StateLayout>;

/// A row or column of a block operator: either a field or the reservoir e.
struct Slot {
  static Slot of(FieldName name) { return Slot{name, false}; }
  static Slot reservoir() { return Slot{FieldName::phi, true}; }

  FieldName name;
  bool is_reservoir;

  bool operator==(const Slot&) const = default;
};

std::string slot_name(const Slot& slot);

/// Flat vector over a layout. State, Cotangent and Tangent share this storage
/// but are distinct types so that pairings and operator applications are
/// checked at compile time.
class SlotVector {
 public:
  explicit SlotVector(LayoutPtr layout);
  SlotVector(LayoutPtr layout, std::vector<double> flat);

  const StateLayout& layout() const noexcept { return *layout_; }
  const LayoutPtr& layout_ptr() const noexcept { return layout_; }
  const Grid& grid() const noexcept { return layout_->grid(); }

  std::span<const double> flat() const noexcept { return flat_; }
  std::span<double> flat() noexcept { return flat_; }
  std::size_t size() const noexcept { return flat_.size(); }

  std::span<const double> field(FieldName name) const;
  std::span<double> field(FieldName name);
  Field get_field(FieldName name) const;
  void set_field(FieldName name, std::span<const double> values);

  double reservoir() const;
  void set_reservoir(double value);

  std::span<const double> slot(const Slot& s) const;
  std::span<double> slot(const Slot& s);

  bool same_layout(const SlotVector& other) const noexcept;

 private:
  LayoutPtr layout_;
  std::vector<double> flat_;
};

/// Point z of the state space.
struct State : SlotVector {
  using SlotVector::SlotVector;
};

/// Functional derivative dF/dz: dx-weighted gradient on fields, plain partial on e.
struct Cotangent : SlotVector {
  using SlotVector::SlotVector;
};

/// Velocity dz/dt.
struct Tangent : SlotVector {
  using SlotVector::SlotVector;
};

/// Duality pairing: dx * sum over field slots plus the product of e slots.
double pairing(const SlotVector& a, const SlotVector& b);
/// Same pairing with absolute values, used to scale roundoff tolerances.
double abs_pairing(const SlotVector& a, const SlotVector& b);

double max_abs(std::span<const double> v);

/// z + h * v
State advance(const State& z, double h, const Tangent& v);

/// Smallest theta value, or nullopt when the layout has no theta field.
std::optional<double> theta_min(const State& z);

}  // namespace beamgeneric
