#include "models/bresse.hpp"

#include <algorithm>
#include <cmath>

#include "models/field_ops.hpp"
#include "models/stability.hpp"

namespace beamgeneric::detail {

using F = FieldName;

BresseModel::BresseModel(ModelId id, ModelParams params, LayoutPtr layout)
    : Model(id, params, std::move(layout)) {}

Field BresseModel::shear_strain(const State& z) const {
  return combine({{1.0, grid().d1(z.field(F::phi))},
                  {1.0, z.field(F::psi)},
                  {params().l, z.field(F::chi)}});
}

Field BresseModel::axial_strain(const State& z) const {
  return combine({{1.0, grid().d1(z.field(F::chi))}, {-params().l, z.field(F::phi)}});
}

double BresseModel::stored_energy(const State& z) const {
  const Grid& g = grid();
  const auto& P = params();
  double e = 0.5 * (g.norm2(z.field(F::p)) + g.norm2(z.field(F::q)) + g.norm2(z.field(F::w))) +
             0.5 * P.k * g.norm2(shear_strain(z)) +
             0.5 * P.b * g.norm2(g.dplus(z.field(F::psi))) +
             0.5 * P.k0 * g.norm2(axial_strain(z));
  if (id() == ModelId::BresseHeatI || id() == ModelId::BresseHeatII) {
    e += 0.5 * g.norm2(z.field(F::theta));
  }
  if (id() == ModelId::BresseHeatII) e += 0.5 * g.norm2(z.field(F::eta));
  return e;
}

double BresseModel::energy(const State& z) const { return stored_energy(z) + z.reservoir(); }

double BresseModel::mech_energy(const State& z) const { return stored_energy(z); }

double BresseModel::entropy(const State& z) const { return params().alpha * z.reservoir(); }

Cotangent BresseModel::grad_energy(const State& z) const {
  const Grid& g = grid();
  const auto& P = params();
  Cotangent xi(layout());
  const Field r1 = shear_strain(z);
  const Field r2 = axial_strain(z);
  assign(xi.field(F::phi), combine({{-P.k, g.d1(r1)}, {-P.k0 * P.l, r2}}));
  assign(xi.field(F::psi), combine({{P.k, r1}, {-P.b, g.d2(z.field(F::psi))}}));
  assign(xi.field(F::chi), combine({{-P.k0, g.d1(r2)}, {P.k * P.l, r1}}));
  assign(xi.field(F::p), z.field(F::p));
  assign(xi.field(F::q), z.field(F::q));
  assign(xi.field(F::w), z.field(F::w));
  if (layout()->contains(F::theta)) assign(xi.field(F::theta), z.field(F::theta));
  if (layout()->contains(F::eta)) assign(xi.field(F::eta), z.field(F::eta));
  xi.set_reservoir(1.0);
  return xi;
}

Cotangent BresseModel::grad_entropy(const State&) const {
  Cotangent xi(layout());
  xi.set_reservoir(params().alpha);
  return xi;
}

BlockOperator BresseModel::poisson(const State&) const {
  const auto& P = params();
  BlockOperator L(layout());
  L.add(Slot::of(F::phi), Slot::of(F::p), block::Identity{1.0})
      .add(Slot::of(F::psi), Slot::of(F::q), block::Identity{1.0})
      .add(Slot::of(F::chi), Slot::of(F::w), block::Identity{1.0})
      .add(Slot::of(F::p), Slot::of(F::phi), block::Identity{-1.0})
      .add(Slot::of(F::q), Slot::of(F::psi), block::Identity{-1.0})
      .add(Slot::of(F::w), Slot::of(F::chi), block::Identity{-1.0});
  if (id() == ModelId::BresseHeatI) {
    L.add(Slot::of(F::q), Slot::of(F::theta), block::D1{-P.gamma})
        .add(Slot::of(F::theta), Slot::of(F::q), block::D1{-P.gamma});
  } else if (id() == ModelId::BresseHeatII) {
    L.add(Slot::of(F::p), Slot::of(F::eta), block::Identity{-P.gamma * P.l})
        .add(Slot::of(F::eta), Slot::of(F::p), block::Identity{P.gamma * P.l})
        .add(Slot::of(F::q), Slot::of(F::theta), block::D1{-P.delta})
        .add(Slot::of(F::theta), Slot::of(F::q), block::D1{-P.delta})
        .add(Slot::of(F::w), Slot::of(F::eta), block::D1{-P.gamma})
        .add(Slot::of(F::eta), Slot::of(F::w), block::D1{-P.gamma});
  }
  return L;
}

FactoredDissipator BresseModel::dissipator(const State& z) const {
  const Grid& g = grid();
  const auto& P = params();
  const Slot e = Slot::reservoir();
  FactoredDissipator M(layout());
  auto pointwise = [&](FieldName f, double rate) {
    M.add_row({{{Slot::of(f), block::Identity{1.0}}, {e, block::ScalarToField{-1.0, z.get_field(f)}}},
               g.constant(rate / P.alpha)});
  };
  auto conductive = [&](FieldName f, double rate) {
    M.add_row({{{Slot::of(f), block::ForwardDiff{1.0}},
                {e, block::ScalarToField{-1.0, g.dplus(z.field(f))}}},
               g.constant(rate / P.alpha)});
  };
  switch (id()) {
    case ModelId::BresseFrictional:
      pointwise(F::p, P.gamma1);
      pointwise(F::q, P.gamma2);
      pointwise(F::w, P.gamma3);
      break;
    case ModelId::BresseHeatI:
      conductive(F::theta, P.kappa);
      break;
    case ModelId::BresseHeatII:
      conductive(F::theta, P.kappa1);
      conductive(F::eta, P.kappa2);
      break;
    default:
      break;
  }
  return M;
}

std::optional<BlockOperator> BresseModel::block_dissipator(const State& z) const {
  const Grid& g = grid();
  const auto& P = params();
  const double inv_alpha = 1.0 / P.alpha;
  const Slot e = Slot::reservoir();
  BlockOperator M(layout());
  double ee = 0.0;
  auto pointwise = [&](FieldName f, double rate) {
    const Field v = z.get_field(f);
    M.add(Slot::of(f), Slot::of(f), block::Identity{rate * inv_alpha})
        .add(Slot::of(f), e, block::ScalarToField{-rate * inv_alpha, v})
        .add(e, Slot::of(f), block::FieldToScalar{-rate * inv_alpha, v});
    ee += rate * g.norm2(v);
  };
  auto conductive = [&](FieldName f, double rate) {
    auto v = z.field(f);
    M.add(Slot::of(f), Slot::of(f), block::D2{-rate * inv_alpha})
        .add(Slot::of(f), e, block::ScalarToField{rate * inv_alpha, g.d2(v)})
        .add(e, Slot::of(f), block::FieldToScalarForward{-rate * inv_alpha, g.dplus(v)});
    ee += rate * g.norm2(g.dplus(v));
  };
  switch (id()) {
    case ModelId::BresseFrictional:
      pointwise(F::p, P.gamma1);
      pointwise(F::q, P.gamma2);
      pointwise(F::w, P.gamma3);
      break;
    case ModelId::BresseHeatI:
      conductive(F::theta, P.kappa);
      break;
    case ModelId::BresseHeatII:
      conductive(F::theta, P.kappa1);
      conductive(F::eta, P.kappa2);
      break;
    default:
      return std::nullopt;
  }
  M.add(e, e, block::ScalarToScalar{ee * inv_alpha});
  return M;
}

Tangent BresseModel::direct_rhs(const State& z) const {
  const Grid& g = grid();
  const auto& P = params();
  Tangent dz(layout());
  auto phi = z.field(F::phi);
  auto chi = z.field(F::chi);
  auto psi = z.field(F::psi);
  auto p = z.field(F::p);
  auto q = z.field(F::q);
  auto w = z.field(F::w);
  const Field r1 = combine({{1.0, g.d1(phi)}, {1.0, psi}, {P.l, chi}});
  const Field r2 = combine({{1.0, g.d1(chi)}, {-P.l, phi}});

  Field p_t = combine({{P.k, g.d1(r1)}, {P.k0 * P.l, r2}});
  Field q_t = combine({{P.b, g.d2(psi)}, {-P.k, r1}});
  Field w_t = combine({{P.k0, g.d1(r2)}, {-P.k * P.l, r1}});
  double e_t = 0.0;

  switch (id()) {
    case ModelId::BresseFrictional:
      p_t = combine({{1.0, p_t}, {-P.gamma1, p}});
      q_t = combine({{1.0, q_t}, {-P.gamma2, q}});
      w_t = combine({{1.0, w_t}, {-P.gamma3, w}});
      e_t = P.gamma1 * g.norm2(p) + P.gamma2 * g.norm2(q) + P.gamma3 * g.norm2(w);
      break;
    case ModelId::BresseHeatI: {
      auto th = z.field(F::theta);
      q_t = combine({{1.0, q_t}, {-P.gamma, g.d1(th)}});
      assign(dz.field(F::theta), combine({{P.kappa, g.d2(th)}, {-P.gamma, g.d1(q)}}));
      e_t = P.kappa * g.norm2(g.dplus(th));
      break;
    }
    case ModelId::BresseHeatII: {
      auto th = z.field(F::theta);
      auto eta = z.field(F::eta);
      p_t = combine({{1.0, p_t}, {-P.gamma * P.l, eta}});
      q_t = combine({{1.0, q_t}, {-P.delta, g.d1(th)}});
      w_t = combine({{1.0, w_t}, {-P.gamma, g.d1(eta)}});
      assign(dz.field(F::theta), combine({{P.kappa1, g.d2(th)}, {-P.delta, g.d1(q)}}));
      assign(dz.field(F::eta),
             combine({{P.kappa2, g.d2(eta)}, {-P.gamma, g.d1(w)}, {P.gamma * P.l, p}}));
      e_t = P.kappa1 * g.norm2(g.dplus(th)) + P.kappa2 * g.norm2(g.dplus(eta));
      break;
    }
    default:
      break;
  }

  assign(dz.field(F::phi), p);
  assign(dz.field(F::psi), q);
  assign(dz.field(F::chi), w);
  assign(dz.field(F::p), p_t);
  assign(dz.field(F::q), q_t);
  assign(dz.field(F::w), w_t);
  dz.set_reservoir(e_t);
  return dz;
}

double BresseModel::dt_bound() const {
  const auto& P = params();
  const double dx = grid().dx();
  StabilityBound bound;
  double omega2 = 3.0 * P.k * std::pow(1.0 / dx + 1.0 + P.l, 2) + 4.0 * P.b / (dx * dx) +
                  2.0 * P.k0 * std::pow(1.0 / dx + P.l, 2);
  switch (id()) {
    case ModelId::BresseFrictional:
      bound.damping(std::max({P.gamma1, P.gamma2, P.gamma3}));
      break;
    case ModelId::BresseHeatI:
      omega2 += std::pow(2.0 * P.gamma / dx, 2);
      bound.diffusion(P.kappa, dx);
      break;
    case ModelId::BresseHeatII:
      omega2 += std::pow(2.0 * P.delta / dx, 2) + std::pow(2.0 * P.gamma * (1.0 / dx + P.l), 2);
      bound.diffusion(std::max(P.kappa1, P.kappa2), dx);
      break;
    default:
      break;
  }
  bound.oscillation(std::sqrt(omega2));
  return bound.value();
}

}  // namespace beamgeneric::detail
