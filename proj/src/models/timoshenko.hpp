#pragma once

#include "beamgeneric/model.hpp"

namespace beamgeneric::detail {

/// Timoshenko beam (phi, psi, p, q) with one of the damping mechanisms:
/// none, dual friction, heat conduction of type I/II/III, or the
/// nonlinear thermal coupling without reservoir.
class TimoshenkoModel final : public Model {
 public:
  TimoshenkoModel(ModelId id, ModelParams params, LayoutPtr layout);

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
  bool log_entropy() const override { return id() == ModelId::TimoshenkoNew; }

 private:
  Field shear_strain(const State& z) const;
  double stored_energy(const State& z) const;
  void require_positive_theta(const State& z) const;
};

}  // namespace beamgeneric::detail
