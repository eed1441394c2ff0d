#pragma once

#include "beamgeneric/model.hpp"

namespace beamgeneric::detail {

/// Bresse arch (phi, psi, chi, p, q, w) with one of the damping mechanisms:
/// none, triple friction, or heat conduction of type I (one temperature)
/// or type II (two temperatures).
class BresseModel final : public Model {
 public:
  BresseModel(ModelId id, ModelParams params, LayoutPtr layout);

  double energy(const State& z) const override;
  double entropy(const State& z) const override;
  Cotangent grad_energy(const State& z) const override;
  Cotangent grad_entropy(const State& z) const override;
  BlockOperator poisson(const State& z) const override;
  FactoredDissipator dissipator(const State& z) const override;
  std::optional<BlockOperator> block_dissipator(const State& z) const override;
  Tangent direct_rhs(const State& z) const override;
  double mech_energy(const State& z) const override;
  double dt_bound() const override;

 private:
  /// phi_x + psi + l*chi
  Field shear_strain(const State& z) const;
  /// chi_x - l*phi
  Field axial_strain(const State& z) const;
  double stored_energy(const State& z) const;
};

}  // namespace beamgeneric::detail
