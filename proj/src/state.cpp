#include "beamgeneric/state.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "beamgeneric/errors.hpp"

namespace beamgeneric {

namespace {

constexpr std::array<std::pair<FieldName, std::string_view>, 9> kFieldNames{{
    {FieldName::phi, "phi"},
    {FieldName::psi, "psi"},
    {FieldName::chi, "chi"},
    {FieldName::p, "p"},
    {FieldName::q, "q"},
    {FieldName::w, "w"},
    {FieldName::theta, "theta"},
    {FieldName::eta, "eta"},
    {FieldName::s, "s"},
}};

}  // namespace

std::string_view to_string(FieldName name) {
  for (const auto& [n, text] : kFieldNames) {
    if (n == name) return text;
  }
  return "?";
}

std::optional<FieldName> parse_field_name(std::string_view text) {
  for (const auto& [n, t] : kFieldNames) {
    if (t == text) return n;
  }
  return std::nullopt;
}

std::string slot_name(const Slot& slot) {
  return slot.is_reservoir ? std::string("e") : std::string(to_string(slot.name));
}

StateLayout::StateLayout(Grid grid, std::vector<FieldName> field_order, bool has_reservoir)
    : grid_(grid), fields_(std::move(field_order)), has_reservoir_(has_reservoir) {
  if (fields_.empty()) throw StructuralError("state layout needs at least one field");
  std::set<FieldName> seen(fields_.begin(), fields_.end());
  if (seen.size() != fields_.size()) {
    throw StructuralError("state layout lists a field more than once");
  }
}

std::size_t StateLayout::dim() const noexcept {
  return static_cast<std::size_t>(grid_.n()) * fields_.size() + (has_reservoir_ ? 1 : 0);
}

bool StateLayout::contains(FieldName name) const noexcept {
  return std::find(fields_.begin(), fields_.end(), name) != fields_.end();
}

std::size_t StateLayout::offset(FieldName name) const {
  auto it = std::find(fields_.begin(), fields_.end(), name);
  if (it == fields_.end()) {
    throw LookupError("field '" + std::string(to_string(name)) + "' is not part of this layout");
  }
  return static_cast<std::size_t>(it - fields_.begin()) * static_cast<std::size_t>(grid_.n());
}

std::size_t StateLayout::reservoir_index() const {
  if (!has_reservoir_) throw StructuralError("layout has no reservoir variable e");
  return dim() - 1;
}

SlotVector::SlotVector(LayoutPtr layout) : layout_(std::move(layout)) {
  if (!layout_) throw StructuralError("null layout");
  flat_.assign(layout_->dim(), 0.0);
}

SlotVector::SlotVector(LayoutPtr layout, std::vector<double> flat)
    : layout_(std::move(layout)), flat_(std::move(flat)) {
  if (!layout_) throw StructuralError("null layout");
  if (flat_.size() != layout_->dim()) {
    throw StructuralError("flat vector has " + std::to_string(flat_.size()) +
                          " entries, layout expects " + std::to_string(layout_->dim()));
  }
}

std::span<const double> SlotVector::field(FieldName name) const {
  return std::span<const double>(flat_).subspan(layout_->offset(name),
                                                static_cast<std::size_t>(grid().n()));
}

std::span<double> SlotVector::field(FieldName name) {
  return std::span<double>(flat_).subspan(layout_->offset(name),
                                          static_cast<std::size_t>(grid().n()));
}

Field SlotVector::get_field(FieldName name) const {
  auto f = field(name);
  return Field(f.begin(), f.end());
}

void SlotVector::set_field(FieldName name, std::span<const double> values) {
  auto f = field(name);
  if (values.size() != f.size()) {
    throw StructuralError("set_field: expected " + std::to_string(f.size()) + " values, got " +
                          std::to_string(values.size()));
  }
  std::copy(values.begin(), values.end(), f.begin());
}

double SlotVector::reservoir() const { return flat_[layout_->reservoir_index()]; }

void SlotVector::set_reservoir(double value) { flat_[layout_->reservoir_index()] = value; }

std::span<const double> SlotVector::slot(const Slot& s) const {
  if (s.is_reservoir) return std::span<const double>(flat_).subspan(layout_->reservoir_index(), 1);
  return field(s.name);
}

std::span<double> SlotVector::slot(const Slot& s) {
  if (s.is_reservoir) return std::span<double>(flat_).subspan(layout_->reservoir_index(), 1);
  return field(s.name);
}

bool SlotVector::same_layout(const SlotVector& other) const noexcept {
  return layout_ == other.layout_ || *layout_ == *other.layout_;
}

namespace {

template <typename Op>
double pair_with(const SlotVector& a, const SlotVector& b, Op op) {
  if (!a.same_layout(b)) throw StructuralError("pairing vectors of different layouts");
  const auto& layout = a.layout();
  const std::size_t nf = layout.num_fields() * static_cast<std::size_t>(layout.grid().n());
  auto fa = a.flat();
  auto fb = b.flat();
  double acc = 0.0;
  for (std::size_t i = 0; i < nf; ++i) acc += op(fa[i], fb[i]);
  acc *= layout.grid().dx();
  if (layout.has_reservoir()) acc += op(fa[nf], fb[nf]);
  return acc;
}

}  // namespace

double pairing(const SlotVector& a, const SlotVector& b) {
  return pair_with(a, b, [](double x, double y) { return x * y; });
}

double abs_pairing(const SlotVector& a, const SlotVector& b) {
  return pair_with(a, b, [](double x, double y) { return std::abs(x * y); });
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

State advance(const State& z, double h, const Tangent& v) {
  if (!z.same_layout(v)) throw StructuralError("advance: tangent layout differs from state");
  std::vector<double> out(z.flat().begin(), z.flat().end());
  auto dv = v.flat();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += h * dv[i];
  return State(z.layout_ptr(), std::move(out));
}

std::optional<double> theta_min(const State& z) {
  if (!z.layout().contains(FieldName::theta)) return std::nullopt;
  auto th = z.field(FieldName::theta);
  return *std::min_element(th.begin(), th.end());
}

}  // namespace beamgeneric
