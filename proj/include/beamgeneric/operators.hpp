#pragma once

#include <variant>
#include <vector>

#include "beamgeneric/state.hpp"

namespace beamgeneric {

// Block entries of the Poisson and dissipative operators. Each kind maps the
// column slot of the argument into the row slot of the result.
namespace block {

struct Identity {  // c * xi
  double c;
};
struct D1 {  // c * d1(xi)
  double c;
};
struct D2 {  // c * d2(xi)
  double c;
};
struct ForwardDiff {  // c * dplus(xi)
  double c;
};
struct MulD1 {  // c * a * d1(xi)
  double c;
  Field a;
};
struct D1Mul {  // c * d1(a * xi)
  double c;
  Field a;
};
struct FieldToScalar {  // c * inner(a, xi): field column -> e row
  double c;
  Field a;
};
struct FieldToScalarForward {  // c * inner(a, dplus(xi)): field column -> e row
  double c;
  Field a;
};
struct ScalarToField {  // c * a * xi_e: e column -> field row
  double c;
  Field a;
};
struct ScalarToScalar {  // c * xi_e
  double c;
};

}  // namespace block

using BlockKind = std::variant<block::Identity, block::D1, block::D2, block::ForwardDiff,
                               block::MulD1, block::D1Mul, block::FieldToScalar,
                               block::FieldToScalarForward, block::ScalarToField,
                               block::ScalarToScalar>;

/// Multiplies the coefficient c of any kind by `factor`.
BlockKind scaled(const BlockKind& kind, double factor);

/// Accumulates kind(in) into out. `in`/`out` are slot views: n values for a
/// field slot, one value for the reservoir.
void apply_block(const Grid& grid, const BlockKind& kind, std::span<const double> in,
                 std::span<double> out);
/// Accumulates kind^*(in) into out, adjoint under the dx-weighted field
/// product and the plain product on e.
void apply_block_adjoint(const Grid& grid, const BlockKind& kind, std::span<const double> in,
                         std::span<double> out);

struct Block {
  Slot row;
  Slot col;
  BlockKind kind;
};

/// Sparse block matrix over a StateLayout; absent blocks act as zero.
class BlockOperator {
 public:
  explicit BlockOperator(LayoutPtr layout) : layout_(std::move(layout)) {}

  /// Throws StructuralError for slots outside the layout or kinds that do not
  /// fit the (row, col) slot types.
  BlockOperator& add(Slot row, Slot col, BlockKind kind);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::vector<Block>& blocks() noexcept { return blocks_; }
  const LayoutPtr& layout() const noexcept { return layout_; }

  std::vector<double> apply_flat(std::span<const double> in) const;
  Tangent apply(const Cotangent& xi) const;
  /// For quadratic test functionals: maps a state displacement to a cotangent.
  Cotangent apply_to_state(const SlotVector& dz) const;

 private:
  LayoutPtr layout_;
  std::vector<Block> blocks_;
};

/// One factor of a dissipator: J(xi) = sum of terms, each mapping a slot of
/// xi to a field, with pointwise nonnegative weight w.
struct FactoredRow {
  std::vector<std::pair<Slot, BlockKind>> terms;
  Field weight;
};

/// M = sum_rows J^* diag(w) J. Symmetry and positive semidefiniteness hold
/// by construction.
class FactoredDissipator {
 public:
  explicit FactoredDissipator(LayoutPtr layout) : layout_(std::move(layout)) {}

  /// Throws ValidationError on negative or non-finite weights.
  FactoredDissipator& add_row(FactoredRow row);

  const std::vector<FactoredRow>& rows() const noexcept { return rows_; }
  std::vector<FactoredRow>& rows() noexcept { return rows_; }
  const LayoutPtr& layout() const noexcept { return layout_; }
  bool empty() const noexcept { return rows_.empty(); }

  Field apply_row(const FactoredRow& row, const Cotangent& xi) const;
  Tangent apply(const Cotangent& xi) const;
  /// [F,F]_M = sum_rows inner(J xi, w J xi)
  double quadratic_form(const Cotangent& xi) const;

 private:
  LayoutPtr layout_;
  std::vector<FactoredRow> rows_;
};

}  // namespace beamgeneric
