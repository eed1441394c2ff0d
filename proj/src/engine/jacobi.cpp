#include <array>
#include <cmath>

#include "beamgeneric/engine.hpp"
#include "beamgeneric/errors.hpp"
#include "beamgeneric/functionals.hpp"

namespace beamgeneric {

double TestFunctional::value(const State& z) const {
  SlotVector dz(z.layout_ptr());
  auto d = dz.flat();
  auto a = z.flat();
  auto b = z0.flat();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a[i] - b[i];
  const Cotangent Adz = A.apply_to_state(dz);
  return 0.5 * pairing(dz, Adz) + pairing(c, z);
}

Cotangent TestFunctional::gradient(const State& z) const {
  SlotVector dz(z.layout_ptr());
  auto d = dz.flat();
  auto a = z.flat();
  auto b = z0.flat();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a[i] - b[i];
  Cotangent g = A.apply_to_state(dz);
  auto gf = g.flat();
  auto cf = c.flat();
  for (std::size_t i = 0; i < gf.size(); ++i) gf[i] += cf[i];
  return g;
}

TestFunctional random_test_functional(const Model& model, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto& layout = *model.layout();
  const double dx2 = layout.grid().dx() * layout.grid().dx();
  BlockOperator A(model.layout());
  const auto& fields = layout.field_order();
  for (FieldName f : fields) {
    A.add(Slot::of(f), Slot::of(f), block::Identity{normal(rng)});
    // Scaled so that the Laplacian block has O(1) norm.
    A.add(Slot::of(f), Slot::of(f), block::D2{0.25 * dx2 * normal(rng)});
  }
  std::uniform_int_distribution<std::size_t> pick(0, fields.size() - 1);
  const std::size_t i = pick(rng);
  const std::size_t j = (i + 1 + pick(rng) % (fields.size() - 1)) % fields.size();
  const double coupling = normal(rng);
  A.add(Slot::of(fields[i]), Slot::of(fields[j]), block::Identity{coupling});
  A.add(Slot::of(fields[j]), Slot::of(fields[i]), block::Identity{coupling});
  if (layout.has_reservoir()) {
    Field a(static_cast<std::size_t>(layout.grid().n()));
    for (double& v : a) v = normal(rng);
    const double c = normal(rng);
    A.add(Slot::reservoir(), Slot::reservoir(), block::ScalarToScalar{normal(rng)});
    A.add(Slot::reservoir(), Slot::of(fields[i]), block::FieldToScalar{c, a});
    A.add(Slot::of(fields[i]), Slot::reservoir(), block::ScalarToField{c, a});
  }
  State z0 = random_state(model, rng);
  Cotangent c = random_cotangent(model, rng);
  return TestFunctional{std::move(z0), std::move(A), std::move(c)};
}

double poisson_bracket(const Model& model, const State& z, const TestFunctional& f,
                       const TestFunctional& g) {
  return pairing(f.gradient(z), model.poisson(z).apply(g.gradient(z)));
}

JacobiResult jacobi_residual(const Model& model, const State& z, const TestFunctional& f1,
                             const TestFunctional& f2, const TestFunctional& f3, double h) {
  if (!(h > 0.0)) throw PreconditionError("finite-difference step must be positive");
  model.require_layout(z);
  const std::array<const TestFunctional*, 3> f{&f1, &f2, &f3};
  const BlockOperator L = model.poisson(z);

  JacobiResult result;
  double sum = 0.0;
  double magnitude = 0.0;
  for (int k = 0; k < 3; ++k) {
    const TestFunctional& a = *f[k];
    const TestFunctional& b = *f[(k + 1) % 3];
    const TestFunctional& c = *f[(k + 2) % 3];
    const Cotangent outer = fd_gradient(
        [&](const State& s) { return poisson_bracket(model, s, a, b); }, z, h);
    const Tangent l_c = L.apply(c.gradient(z));
    sum += pairing(outer, l_c);
    magnitude += abs_pairing(outer, l_c);
  }
  result.residual = std::abs(sum);
  result.scale = std::max(1.0, magnitude);
  return result;
}

}  // namespace beamgeneric
