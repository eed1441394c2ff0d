#include "beamgeneric/operators.hpp"

#include <cmath>
#include <type_traits>

#include "beamgeneric/errors.hpp"

namespace beamgeneric {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

enum class SlotType { field, scalar };

struct Signature {
  SlotType in;
  SlotType out;
};

Signature signature(const BlockKind& kind) {
  return std::visit(
      overloaded{
          [](const block::FieldToScalar&) { return Signature{SlotType::field, SlotType::scalar}; },
          [](const block::FieldToScalarForward&) {
            return Signature{SlotType::field, SlotType::scalar};
          },
          [](const block::ScalarToField&) { return Signature{SlotType::scalar, SlotType::field}; },
          [](const block::ScalarToScalar&) {
            return Signature{SlotType::scalar, SlotType::scalar};
          },
          [](const auto&) { return Signature{SlotType::field, SlotType::field}; },
      },
      kind);
}

void axpy(double c, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

void check_field_arg(const Grid& grid, const Field& a) {
  if (a.size() != static_cast<std::size_t>(grid.n())) {
    throw StructuralError("block coefficient field does not live on the layout grid");
  }
}

void check_slot(const StateLayout& layout, const Slot& s) {
  if (s.is_reservoir) {
    if (!layout.has_reservoir()) throw StructuralError("block references e, layout has none");
  } else if (!layout.contains(s.name)) {
    throw StructuralError("block references field '" + std::string(to_string(s.name)) +
                          "' absent from layout");
  }
}

Field product(std::span<const double> a, std::span<const double> b) {
  Field out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

}  // namespace

BlockKind scaled(const BlockKind& kind, double factor) {
  BlockKind out = kind;
  std::visit([factor](auto& k) { k.c *= factor; }, out);
  return out;
}

void apply_block(const Grid& grid, const BlockKind& kind, std::span<const double> in,
                 std::span<double> out) {
  std::visit(
      overloaded{
          [&](const block::Identity& k) { axpy(k.c, in, out); },
          [&](const block::D1& k) { axpy(k.c, grid.d1(in), out); },
          [&](const block::D2& k) { axpy(k.c, grid.d2(in), out); },
          [&](const block::ForwardDiff& k) { axpy(k.c, grid.dplus(in), out); },
          [&](const block::MulD1& k) { axpy(k.c, product(k.a, grid.d1(in)), out); },
          [&](const block::D1Mul& k) { axpy(k.c, grid.d1(product(k.a, in)), out); },
          [&](const block::FieldToScalar& k) { out[0] += k.c * grid.inner(k.a, in); },
          [&](const block::FieldToScalarForward& k) {
            out[0] += k.c * grid.inner(k.a, grid.dplus(in));
          },
          [&](const block::ScalarToField& k) { axpy(k.c * in[0], k.a, out); },
          [&](const block::ScalarToScalar& k) { out[0] += k.c * in[0]; },
      },
      kind);
}

void apply_block_adjoint(const Grid& grid, const BlockKind& kind, std::span<const double> in,
                         std::span<double> out) {
  std::visit(
      overloaded{
          [&](const block::Identity& k) { axpy(k.c, in, out); },
          [&](const block::D1& k) { axpy(-k.c, grid.d1(in), out); },
          [&](const block::D2& k) { axpy(k.c, grid.d2(in), out); },
          [&](const block::ForwardDiff& k) { axpy(-k.c, grid.dminus(in), out); },
          [&](const block::MulD1& k) { axpy(-k.c, grid.d1(product(k.a, in)), out); },
          [&](const block::D1Mul& k) { axpy(-k.c, product(k.a, grid.d1(in)), out); },
          [&](const block::FieldToScalar& k) { axpy(k.c * in[0], k.a, out); },
          [&](const block::FieldToScalarForward& k) {
            axpy(-k.c * in[0], grid.dminus(k.a), out);
          },
          [&](const block::ScalarToField& k) { out[0] += k.c * grid.inner(k.a, in); },
          [&](const block::ScalarToScalar& k) { out[0] += k.c * in[0]; },
      },
      kind);
}

BlockOperator& BlockOperator::add(Slot row, Slot col, BlockKind kind) {
  check_slot(*layout_, row);
  check_slot(*layout_, col);
  const Signature sig = signature(kind);
  const SlotType col_type = col.is_reservoir ? SlotType::scalar : SlotType::field;
  const SlotType row_type = row.is_reservoir ? SlotType::scalar : SlotType::field;
  if (sig.in != col_type || sig.out != row_type) {
    throw StructuralError("block kind does not fit slots (" + slot_name(row) + ", " +
                          slot_name(col) + ")");
  }
  std::visit(
      [&](const auto& k) {
        if constexpr (requires { k.a; }) check_field_arg(layout_->grid(), k.a);
      },
      kind);
  blocks_.push_back(Block{row, col, std::move(kind)});
  return *this;
}

std::vector<double> BlockOperator::apply_flat(std::span<const double> in) const {
  if (in.size() != layout_->dim()) throw StructuralError("operator argument has wrong dimension");
  const SlotVector arg(layout_, std::vector<double>(in.begin(), in.end()));
  SlotVector result(layout_);
  for (const auto& b : blocks_) {
    apply_block(layout_->grid(), b.kind, arg.slot(b.col), result.slot(b.row));
  }
  return {result.flat().begin(), result.flat().end()};
}

Tangent BlockOperator::apply(const Cotangent& xi) const {
  if (!(xi.layout() == *layout_)) throw StructuralError("cotangent layout differs from operator");
  return Tangent(layout_, apply_flat(xi.flat()));
}

Cotangent BlockOperator::apply_to_state(const SlotVector& dz) const {
  if (!(dz.layout() == *layout_)) throw StructuralError("state layout differs from operator");
  return Cotangent(layout_, apply_flat(dz.flat()));
}

FactoredDissipator& FactoredDissipator::add_row(FactoredRow row) {
  const Grid& grid = layout_->grid();
  check_field_arg(grid, row.weight);
  for (double w : row.weight) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ValidationError("dissipator weights must be finite and nonnegative");
    }
  }
  for (const auto& [slot, kind] : row.terms) {
    check_slot(*layout_, slot);
    const Signature sig = signature(kind);
    const SlotType col_type = slot.is_reservoir ? SlotType::scalar : SlotType::field;
    if (sig.in != col_type || sig.out != SlotType::field) {
      throw StructuralError("factored row term does not map slot '" + slot_name(slot) +
                            "' to a field");
    }
  }
  rows_.push_back(std::move(row));
  return *this;
}

Field FactoredDissipator::apply_row(const FactoredRow& row, const Cotangent& xi) const {
  const Grid& grid = layout_->grid();
  Field out(static_cast<std::size_t>(grid.n()), 0.0);
  for (const auto& [slot, kind] : row.terms) apply_block(grid, kind, xi.slot(slot), out);
  return out;
}

Tangent FactoredDissipator::apply(const Cotangent& xi) const {
  if (!(xi.layout() == *layout_)) throw StructuralError("cotangent layout differs from dissipator");
  Tangent result(layout_);
  const Grid& grid = layout_->grid();
  for (const auto& row : rows_) {
    Field r = apply_row(row, xi);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] *= row.weight[i];
    for (const auto& [slot, kind] : row.terms) {
      apply_block_adjoint(grid, kind, r, result.slot(slot));
    }
  }
  return result;
}

double FactoredDissipator::quadratic_form(const Cotangent& xi) const {
  if (!(xi.layout() == *layout_)) throw StructuralError("cotangent layout differs from dissipator");
  double acc = 0.0;
  for (const auto& row : rows_) {
    const Field r = apply_row(row, xi);
    acc += layout_->grid().inner(r, product(r, row.weight));
  }
  return acc;
}

}  // namespace beamgeneric
