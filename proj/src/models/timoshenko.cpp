#include "models/timoshenko.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "beamgeneric/errors.hpp"
#include "models/field_ops.hpp"
#include "models/stability.hpp"

namespace beamgeneric::detail {

using F = FieldName;

TimoshenkoModel::TimoshenkoModel(ModelId id, ModelParams params, LayoutPtr layout)
    : Model(id, params, std::move(layout)) {}

Field TimoshenkoModel::shear_strain(const State& z) const {
  return combine({{1.0, grid().d1(z.field(F::phi))}, {1.0, z.field(F::psi)}});
}

double TimoshenkoModel::stored_energy(const State& z) const {
  const Grid& g = grid();
  const auto& P = params();
  const Field r = shear_strain(z);
  double e = 0.5 * g.norm2(z.field(F::p)) + 0.5 * g.norm2(z.field(F::q)) + 0.5 * P.k * g.norm2(r) +
             0.5 * P.b * g.norm2(g.dplus(z.field(F::psi)));
  switch (id()) {
    case ModelId::TimoshenkoHeatI:
      e += 0.5 * g.norm2(z.field(F::theta));
      break;
    case ModelId::TimoshenkoHeatII:
      e += 0.5 * g.norm2(z.field(F::theta)) + 0.5 * g.norm2(z.field(F::s));
      break;
    case ModelId::TimoshenkoHeatIII:
      e += 0.5 * P.delta * g.norm2(g.dplus(z.field(F::theta))) + 0.5 * g.norm2(z.field(F::w));
      break;
    default:
      break;
  }
  return e;
}

double TimoshenkoModel::energy(const State& z) const {
  double e = stored_energy(z);
  if (id() == ModelId::TimoshenkoNew) e += grid().integrate(z.field(F::theta));
  if (layout()->has_reservoir()) e += z.reservoir();
  return e;
}

double TimoshenkoModel::mech_energy(const State& z) const { return stored_energy(z); }

void TimoshenkoModel::require_positive_theta(const State& z) const {
  for (double t : z.field(F::theta)) {
    if (!(t > 0.0)) {
      throw DomainError("entropy log(theta) needs theta > 0, found " + std::to_string(t));
    }
  }
}

double TimoshenkoModel::entropy(const State& z) const {
  if (id() == ModelId::TimoshenkoNew) {
    require_positive_theta(z);
    auto th = z.field(F::theta);
    Field logs(th.size());
    std::transform(th.begin(), th.end(), logs.begin(), [](double t) { return std::log(t); });
    return grid().integrate(logs);
  }
  return params().alpha * z.reservoir();
}

Cotangent TimoshenkoModel::grad_energy(const State& z) const {
  const Grid& g = grid();
  const auto& P = params();
  Cotangent xi(layout());
  const Field r = shear_strain(z);
  assign(xi.field(F::phi), combine({{-P.k, g.d1(r)}}));
  assign(xi.field(F::psi), combine({{P.k, r}, {-P.b, g.d2(z.field(F::psi))}}));
  assign(xi.field(F::p), z.field(F::p));
  assign(xi.field(F::q), z.field(F::q));
  switch (id()) {
    case ModelId::TimoshenkoHeatI:
      assign(xi.field(F::theta), z.field(F::theta));
      break;
    case ModelId::TimoshenkoHeatII:
      assign(xi.field(F::theta), z.field(F::theta));
      assign(xi.field(F::s), z.field(F::s));
      break;
    case ModelId::TimoshenkoHeatIII:
      assign(xi.field(F::theta), combine({{-P.delta, g.d2(z.field(F::theta))}}));
      assign(xi.field(F::w), z.field(F::w));
      break;
    case ModelId::TimoshenkoNew:
      assign(xi.field(F::theta), g.constant(1.0));
      break;
    default:
      break;
  }
  if (layout()->has_reservoir()) xi.set_reservoir(1.0);
  return xi;
}

Cotangent TimoshenkoModel::grad_entropy(const State& z) const {
  Cotangent xi(layout());
  if (id() == ModelId::TimoshenkoNew) {
    require_positive_theta(z);
    auto th = z.field(F::theta);
    auto out = xi.field(F::theta);
    for (std::size_t i = 0; i < th.size(); ++i) out[i] = 1.0 / th[i];
  } else {
    xi.set_reservoir(params().alpha);
  }
  return xi;
}

BlockOperator TimoshenkoModel::poisson(const State& z) const {
  const auto& P = params();
  BlockOperator L(layout());
  L.add(Slot::of(F::phi), Slot::of(F::p), block::Identity{1.0})
      .add(Slot::of(F::psi), Slot::of(F::q), block::Identity{1.0})
      .add(Slot::of(F::p), Slot::of(F::phi), block::Identity{-1.0})
      .add(Slot::of(F::q), Slot::of(F::psi), block::Identity{-1.0});
  switch (id()) {
    case ModelId::TimoshenkoHeatI:
      L.add(Slot::of(F::q), Slot::of(F::theta), block::D1{-P.gamma})
          .add(Slot::of(F::theta), Slot::of(F::q), block::D1{-P.gamma});
      break;
    case ModelId::TimoshenkoHeatII:
      L.add(Slot::of(F::q), Slot::of(F::theta), block::D1{-P.gamma})
          .add(Slot::of(F::theta), Slot::of(F::q), block::D1{-P.gamma})
          .add(Slot::of(F::theta), Slot::of(F::s), block::D1{-1.0})
          .add(Slot::of(F::s), Slot::of(F::theta), block::D1{-1.0});
      break;
    case ModelId::TimoshenkoHeatIII:
      L.add(Slot::of(F::q), Slot::of(F::w), block::D1{-P.gamma})
          .add(Slot::of(F::w), Slot::of(F::q), block::D1{-P.gamma})
          .add(Slot::of(F::theta), Slot::of(F::w), block::Identity{1.0})
          .add(Slot::of(F::w), Slot::of(F::theta), block::Identity{-1.0});
      break;
    case ModelId::TimoshenkoNew: {
      const Field theta = z.get_field(F::theta);
      L.add(Slot::of(F::q), Slot::of(F::theta), block::D1Mul{P.gamma, theta})
          .add(Slot::of(F::theta), Slot::of(F::q), block::MulD1{P.gamma, theta});
      break;
    }
    default:
      break;
  }
  return L;
}

FactoredDissipator TimoshenkoModel::dissipator(const State& z) const {
  const Grid& g = grid();
  const auto& P = params();
  FactoredDissipator M(layout());
  const Slot e = Slot::reservoir();
  // Pointwise friction/relaxation: J(xi) = xi_f - f * xi_e.
  auto pointwise = [&](FieldName f, double rate) {
    M.add_row({{{Slot::of(f), block::Identity{1.0}}, {e, block::ScalarToField{-1.0, z.get_field(f)}}},
               g.constant(rate / P.alpha)});
  };
  // Gradient dissipation: J(xi) = dplus(xi_f) - dplus(f) * xi_e.
  auto conductive = [&](FieldName f, double rate) {
    M.add_row({{{Slot::of(f), block::ForwardDiff{1.0}},
                {e, block::ScalarToField{-1.0, g.dplus(z.field(f))}}},
               g.constant(rate / P.alpha)});
  };
  switch (id()) {
    case ModelId::TimoshenkoFrictional:
      pointwise(F::p, P.delta1);
      pointwise(F::q, P.delta2);
      break;
    case ModelId::TimoshenkoHeatI:
      conductive(F::theta, P.kappa);
      break;
    case ModelId::TimoshenkoHeatII:
      pointwise(F::s, P.beta);
      break;
    case ModelId::TimoshenkoHeatIII:
      conductive(F::w, P.K);
      break;
    case ModelId::TimoshenkoNew: {
      // Staggered weight delta*theta_i*theta_{i+1} turns M(1/theta) into delta*d2(theta).
      auto th = z.field(F::theta);
      const int n = g.n();
      Field weight(th.size());
      for (int i = 0; i < n; ++i) weight[i] = P.delta * th[i] * th[(i + 1) % n];
      M.add_row({{{Slot::of(F::theta), block::ForwardDiff{1.0}}}, std::move(weight)});
      break;
    }
    default:
      break;
  }
  return M;
}

std::optional<BlockOperator> TimoshenkoModel::block_dissipator(const State& z) const {
  const Grid& g = grid();
  const auto& P = params();
  const double inv_alpha = 1.0 / P.alpha;
  const Slot e = Slot::reservoir();
  BlockOperator M(layout());
  auto pointwise = [&](FieldName f, double rate) {
    const Field v = z.get_field(f);
    M.add(Slot::of(f), Slot::of(f), block::Identity{rate * inv_alpha})
        .add(Slot::of(f), e, block::ScalarToField{-rate * inv_alpha, v})
        .add(e, Slot::of(f), block::FieldToScalar{-rate * inv_alpha, v})
        .add(e, e, block::ScalarToScalar{rate * inv_alpha * g.norm2(v)});
  };
  auto conductive = [&](FieldName f, double rate) {
    auto v = z.field(f);
    M.add(Slot::of(f), Slot::of(f), block::D2{-rate * inv_alpha})
        .add(Slot::of(f), e, block::ScalarToField{rate * inv_alpha, g.d2(v)})
        .add(e, Slot::of(f), block::FieldToScalarForward{-rate * inv_alpha, g.dplus(v)})
        .add(e, e, block::ScalarToScalar{rate * inv_alpha * g.norm2(g.dplus(v))});
  };
  switch (id()) {
    case ModelId::TimoshenkoFrictional:
      pointwise(F::p, P.delta1);
      pointwise(F::q, P.delta2);
      return M;
    case ModelId::TimoshenkoHeatI:
      conductive(F::theta, P.kappa);
      return M;
    case ModelId::TimoshenkoHeatII:
      pointwise(F::s, P.beta);
      return M;
    case ModelId::TimoshenkoHeatIII:
      conductive(F::w, P.K);
      return M;
    default:
      return std::nullopt;
  }
}

Tangent TimoshenkoModel::direct_rhs(const State& z) const {
  const Grid& g = grid();
  const auto& P = params();
  Tangent dz(layout());
  auto phi = z.field(F::phi);
  auto psi = z.field(F::psi);
  auto p = z.field(F::p);
  auto q = z.field(F::q);
  const Field r = combine({{1.0, g.d1(phi)}, {1.0, psi}});

  Field p_t = combine({{P.k, g.d1(r)}});
  Field q_t = combine({{P.b, g.d2(psi)}, {-P.k, r}});
  double e_t = 0.0;

  switch (id()) {
    case ModelId::TimoshenkoFrictional:
      p_t = combine({{1.0, p_t}, {-P.delta1, p}});
      q_t = combine({{1.0, q_t}, {-P.delta2, q}});
      e_t = P.delta1 * g.norm2(p) + P.delta2 * g.norm2(q);
      break;
    case ModelId::TimoshenkoHeatI: {
      auto th = z.field(F::theta);
      q_t = combine({{1.0, q_t}, {-P.gamma, g.d1(th)}});
      assign(dz.field(F::theta), combine({{P.kappa, g.d2(th)}, {-P.gamma, g.d1(q)}}));
      e_t = P.kappa * g.norm2(g.dplus(th));
      break;
    }
    case ModelId::TimoshenkoHeatII: {
      auto th = z.field(F::theta);
      auto s = z.field(F::s);
      q_t = combine({{1.0, q_t}, {-P.gamma, g.d1(th)}});
      assign(dz.field(F::theta), combine({{-1.0, g.d1(s)}, {-P.gamma, g.d1(q)}}));
      assign(dz.field(F::s), combine({{-1.0, g.d1(th)}, {-P.beta, s}}));
      e_t = P.beta * g.norm2(s);
      break;
    }
    case ModelId::TimoshenkoHeatIII: {
      auto th = z.field(F::theta);
      auto w = z.field(F::w);
      q_t = combine({{1.0, q_t}, {-P.gamma, g.d1(w)}});
      assign(dz.field(F::theta), w);
      assign(dz.field(F::w),
             combine({{P.delta, g.d2(th)}, {-P.gamma, g.d1(q)}, {P.K, g.d2(w)}}));
      e_t = P.K * g.norm2(g.dplus(w));
      break;
    }
    case ModelId::TimoshenkoNew: {
      auto th = z.field(F::theta);
      q_t = combine({{1.0, q_t}, {P.gamma, g.d1(th)}});
      assign(dz.field(F::theta), combine({{P.delta, g.d2(th)}, {P.gamma, times(th, g.d1(q))}}));
      break;
    }
    default:
      break;
  }

  assign(dz.field(F::phi), p);
  assign(dz.field(F::psi), q);
  assign(dz.field(F::p), p_t);
  assign(dz.field(F::q), q_t);
  if (layout()->has_reservoir()) dz.set_reservoir(e_t);
  return dz;
}

double TimoshenkoModel::dt_bound() const {
  const auto& P = params();
  const double dx = grid().dx();
  StabilityBound bound;
  double omega2 = 2.0 * P.k * std::pow(1.0 / dx + 1.0, 2) + 4.0 * P.b / (dx * dx);
  switch (id()) {
    case ModelId::TimoshenkoFrictional:
      bound.damping(std::max(P.delta1, P.delta2));
      break;
    case ModelId::TimoshenkoHeatI:
      omega2 += std::pow(2.0 * P.gamma / dx, 2);
      bound.diffusion(P.kappa, dx);
      break;
    case ModelId::TimoshenkoHeatII:
      omega2 += std::pow(2.0 * P.gamma / dx, 2) + 2.0 / (dx * dx);
      bound.damping(P.beta);
      break;
    case ModelId::TimoshenkoHeatIII:
      omega2 += std::pow(2.0 * P.gamma / dx, 2) + 4.0 * P.delta / (dx * dx);
      bound.diffusion(P.K, dx);
      break;
    case ModelId::TimoshenkoNew:
      omega2 += std::pow(2.0 * P.gamma / dx, 2);
      bound.diffusion(P.delta, dx);
      break;
    default:
      break;
  }
  bound.oscillation(std::sqrt(omega2));
  return bound.value();
}

}  // namespace beamgeneric::detail
