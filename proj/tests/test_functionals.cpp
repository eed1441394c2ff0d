#include <doctest.h>

#include <cmath>
#include <random>

#include "beamgeneric/catalog.hpp"
#include "beamgeneric/engine.hpp"
#include "beamgeneric/errors.hpp"
#include "beamgeneric/functionals.hpp"

using namespace beamgeneric;
using F = FieldName;

namespace {

ModelPtr make(ModelId id, int n = 16, ModelParams p = {}) {
  return build_model(id, p, Grid(n, 1.0));
}

// Periodic stencils written out independently of Grid.
double at(const Field& u, int i) {
  const int n = static_cast<int>(u.size());
  return u[static_cast<std::size_t>(((i % n) + n) % n)];
}

double sup(std::span<const double> a, std::span<const double> b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("dual-frictional energy with p = 2") {
  const ModelPtr m = make(ModelId::TimoshenkoFrictional, 4);
  State z(m->layout());
  z.set_field(F::p, Field{2, 2, 2, 2});
  CHECK(energy(*m, z) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("energy by hand quadrature on a random state") {
  ModelParams p;
  p.k = 1.7;
  p.b = 0.6;
  const ModelPtr m = make(ModelId::TimoshenkoFrictional, 12, p);
  std::mt19937_64 rng(11);
  const State z = random_state(*m, rng);
  const Field phi = z.get_field(F::phi), psi = z.get_field(F::psi);
  const Field pp = z.get_field(F::p), qq = z.get_field(F::q);
  const double dx = 1.0 / 12;
  double want = z.reservoir();
  for (int i = 0; i < 12; ++i) {
    const double shear = (at(phi, i + 1) - at(phi, i - 1)) / (2 * dx) + psi[i];
    const double bend = (at(psi, i + 1) - psi[i]) / dx;
    want += dx * (0.5 * pp[i] * pp[i] + 0.5 * qq[i] * qq[i] + 0.5 * p.k * shear * shear +
                  0.5 * p.b * bend * bend);
  }
  CHECK(energy(*m, z) == doctest::Approx(want).epsilon(1e-13));
  CHECK(m->mech_energy(z) == doctest::Approx(want - z.reservoir()).epsilon(1e-13));
}

TEST_CASE("zero state energies") {
  for (ModelId id : all_model_ids()) {
    const ModelPtr m = make(id);
    const State z = default_initial_state(id, m->grid(), 1, 0.0);
    CAPTURE(to_string(id));
    if (id == ModelId::TimoshenkoNew) {
      CHECK(energy(*m, z) == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(entropy(*m, z) == 0.0);
    } else {
      CHECK(energy(*m, z) == 0.0);
    }
  }
}

TEST_CASE("entropy is alpha times e or the integral of log theta") {
  ModelParams p;
  p.alpha = 2;
  const ModelPtr m = make(ModelId::TimoshenkoHeatI, 8, p);
  State z(m->layout());
  z.set_reservoir(3);
  CHECK(entropy(*m, z) == 6.0);

  const ModelPtr n = make(ModelId::TimoshenkoNew, 4);
  State t(n->layout());
  t.set_field(F::theta, Field{1, 2, 4, 8});
  CHECK(entropy(*n, t) == doctest::Approx(0.25 * std::log(64.0)));
  t.set_field(F::theta, Field{1, 0, 1, 1});
  CHECK_THROWS_AS(entropy(*n, t), DomainError);
  CHECK_THROWS_AS(grad_entropy(*n, t), DomainError);
}

TEST_CASE("gradients at simple states") {
  for (ModelId id : all_model_ids()) {
    const ModelPtr m = make(id);
    const State z = default_initial_state(id, m->grid(), 1, 0.0);
    const Cotangent g = grad_energy(*m, z);
    CAPTURE(to_string(id));
    for (FieldName f : z.layout().field_order()) {
      const double want = (id == ModelId::TimoshenkoNew && f == F::theta) ? 1.0 : 0.0;
      for (double v : g.field(f)) CHECK(v == want);
    }
    if (z.layout().has_reservoir()) {
      CHECK(g.reservoir() == 1.0);
      const Cotangent s = grad_entropy(*m, z);
      CHECK(s.reservoir() == 1.0);
      CHECK(max_abs(s.flat().first(s.size() - 1)) == 0.0);
    }
  }
  const ModelPtr n = make(ModelId::TimoshenkoNew, 4);
  State t(n->layout());
  t.set_field(F::theta, Field{2, 2, 2, 2});
  for (double v : grad_entropy(*n, t).field(F::theta)) CHECK(v == 0.5);
}

TEST_CASE("fd oracle on simple functionals") {
  const ModelPtr m = make(ModelId::TimoshenkoFrictional, 8);
  std::mt19937_64 rng(2);
  const State z = random_state(*m, rng);
  const Cotangent g = fd_gradient(
      [&](const State& s) { return 0.5 * m->grid().norm2(s.field(F::p)); }, z);
  CHECK(sup(g.field(F::p), z.field(F::p)) < 1e-8);
  CHECK(max_abs(g.field(F::q)) < 1e-8);
  CHECK(std::abs(g.reservoir()) < 1e-8);

  ModelParams p;
  p.alpha = 3.5;
  const ModelPtr a = make(ModelId::TimoshenkoFrictional, 8, p);
  const Cotangent s = fd_gradient([&](const State& x) { return entropy(*a, x); }, z);
  CHECK(s.reservoir() == doctest::Approx(3.5).epsilon(1e-9));

  const State zero(m->layout());
  const Cotangent e = fd_gradient([&](const State& x) { return energy(*m, x); }, zero);
  CHECK(e.reservoir() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_abs(e.flat().first(e.size() - 1)) < 1e-9);
}

TEST_CASE("analytic gradients agree with finite differences on every model") {
  std::mt19937_64 rng(5);
  for (ModelId id : all_model_ids()) {
    const ModelPtr m = make(id, 24);
    CAPTURE(to_string(id));
    for (int t = 0; t < 5; ++t) {
      const State z = random_state(*m, rng);
      for (FunctionalKind kind : {FunctionalKind::energy, FunctionalKind::entropy}) {
        const Cotangent g = gradient(*m, kind, z);
        const Cotangent fd =
            fd_gradient([&](const State& s) { return evaluate(*m, kind, s); }, z);
        CHECK(sup(g.flat(), fd.flat()) <= 1e-6 * (1.0 + max_abs(g.flat())));
      }
    }
  }
}

TEST_CASE("grad_energy is affine for quadratic energies") {
  std::mt19937_64 rng(9);
  for (ModelId id : all_model_ids()) {
    if (id == ModelId::TimoshenkoNew) continue;
    const ModelPtr m = make(id);
    const State a = random_state(*m, rng);
    const State b = random_state(*m, rng);
    const Tangent bt(b.layout_ptr(), std::vector<double>(b.flat().begin(), b.flat().end()));
    const State ab = advance(a, 1.0, bt);
    const Cotangent ga = grad_energy(*m, a), gb = grad_energy(*m, b), gab = grad_energy(*m, ab);
    const Cotangent g0 = grad_energy(*m, State(m->layout()));
    double worst = 0;
    for (std::size_t i = 0; i < ga.size(); ++i) {
      worst = std::max(worst, std::abs(gab.flat()[i] - ga.flat()[i] - gb.flat()[i] +
                                       g0.flat()[i]));
    }
    CAPTURE(to_string(id));
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("layout mismatch is structural") {
  const ModelPtr a = make(ModelId::TimoshenkoFrictional);
  const ModelPtr b = make(ModelId::BresseFrictional);
  const State z(b->layout());
  CHECK_THROWS_AS(energy(*a, z), StructuralError);
  CHECK_THROWS_AS(grad_entropy(*a, z), StructuralError);
}
