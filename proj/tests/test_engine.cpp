#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "beamgeneric/catalog.hpp"
#include "beamgeneric/engine.hpp"
#include "beamgeneric/errors.hpp"
#include "beamgeneric/functionals.hpp"

using namespace beamgeneric;
using F = FieldName;

namespace {

ModelPtr make(ModelId id, int n = 32, ModelParams p = {}) {
  return build_model(id, p, Grid(n, 1.0));
}

IntegratorConfig config(const Model& m, double t_end, int every = 1) {
  IntegratorConfig c;
  c.dt = std::min(1e-3, m.dt_bound());
  c.t_end = t_end;
  c.record_every = every;
  return c;
}

// Delegates to a real model but flips the sign of one Poisson block.
class FlippedBlock final : public Model {
 public:
  explicit FlippedBlock(ModelPtr inner)
      : Model(inner->id(), inner->params(), inner->layout()), inner_(std::move(inner)) {}
  double energy(const State& z) const override { return inner_->energy(z); }
  double entropy(const State& z) const override { return inner_->entropy(z); }
  Cotangent grad_energy(const State& z) const override { return inner_->grad_energy(z); }
  Cotangent grad_entropy(const State& z) const override { return inner_->grad_entropy(z); }
  BlockOperator poisson(const State& z) const override {
    BlockOperator L = inner_->poisson(z);
    L.blocks().front().kind = scaled(L.blocks().front().kind, -1.0);
    return L;
  }
  FactoredDissipator dissipator(const State& z) const override { return inner_->dissipator(z); }
  Tangent direct_rhs(const State& z) const override { return inner_->direct_rhs(z); }
  double mech_energy(const State& z) const override { return inner_->mech_energy(z); }
  double dt_bound() const override { return inner_->dt_bound(); }

 private:
  ModelPtr inner_;
};

}  // namespace

TEST_CASE("integrate records and preconditions") {
  const ModelPtr m = make(ModelId::TimoshenkoFrictional);
  const State z0 = default_initial_state(m->id(), m->grid(), 1, 0.1);
  IntegratorConfig c;
  c.dt = 1e-3;
  c.t_end = 0.1;
  c.record_every = 7;
  const auto rec = integrate(*m, z0, c);
  // steps 0, 7, ..., 98 and the final step 100
  CHECK(rec.size() == 16);
  CHECK(rec.front().t == 0.0);
  CHECK(rec.back().t == doctest::Approx(0.1));
  CHECK(rec[1].t == doctest::Approx(0.007));

  c.dt = 0;
  CHECK_THROWS_AS(integrate(*m, z0, c), PreconditionError);
  CHECK_THROWS_AS(step_rk4(*m, z0, 0.0), PreconditionError);
  c.dt = 1e-3;
  c.t_end = 1e-4;
  CHECK_THROWS_AS(integrate(*m, z0, c), PreconditionError);
  c.t_end = 1;
  c.record_every = 0;
  CHECK_THROWS_AS(integrate(*m, z0, c), PreconditionError);

  const ModelPtr h = make(ModelId::TimoshenkoHeatI, 64);
  IntegratorConfig fast;
  fast.dt = 1e-3;
  CHECK_THROWS_AS(integrate(*h, default_initial_state(h->id(), h->grid(), 1, 0.1), fast),
                  PreconditionError);
}

TEST_CASE("divergence and domain errors name the step") {
  const ModelPtr m = make(ModelId::TimoshenkoUndamped);
  State z0 = default_initial_state(m->id(), m->grid(), 1, 0.1);
  z0.field(F::p)[3] = std::numeric_limits<double>::infinity();
  try {
    IntegratorConfig c;
    c.t_end = 0.01;
    integrate(*m, z0, c);
    FAIL("expected DivergenceError");
  } catch (const DivergenceError& e) {
    CHECK(e.step() == 1);
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }

  const ModelPtr n = make(ModelId::TimoshenkoNew);
  State t0 = default_initial_state(n->id(), n->grid(), 1, 0.1);
  t0.field(F::theta)[0] = 0.0;
  CHECK_THROWS_AS(integrate(*n, t0, config(*n, 0.01)), DomainError);
}

TEST_CASE("undamped energy is conserved and damped total energy too") {
  for (ModelId id : {ModelId::TimoshenkoUndamped, ModelId::BresseUndamped,
                     ModelId::TimoshenkoFrictional, ModelId::TimoshenkoNew}) {
    const ModelPtr m = make(id);
    const auto rec = integrate(*m, default_initial_state(id, m->grid(), 1, 0.1), config(*m, 2.0));
    double drift = 0;
    for (const auto& r : rec) {
      drift = std::max(drift, std::abs(r.energy - rec[0].energy) / std::abs(rec[0].energy));
    }
    CAPTURE(to_string(id));
    CHECK(drift <= 1e-6);
    if (!is_damped(id)) {
      CHECK(std::abs(rec.back().mech_energy - rec[0].mech_energy) <= 1e-6 * rec[0].mech_energy);
    }
  }
}

TEST_CASE("entropy never decreases on damped trajectories") {
  for (ModelId id : all_model_ids()) {
    if (!is_damped(id)) continue;
    const ModelPtr m = make(id, 16);
    State z0 = default_initial_state(id, m->grid(), 2, 0.2);
    const auto rec = integrate(*m, z0, config(*m, 0.5));
    CAPTURE(to_string(id));
    for (std::size_t i = 1; i < rec.size(); ++i) {
      CHECK(rec[i].entropy >= rec[i - 1].entropy - 1e-12);
    }
    for (const auto& r : rec) {
      CHECK(r.res_LdS <= 1e-12 * std::max(1.0, r.energy));
      CHECK(r.res_MdE <= 1e-12 * std::max(1.0, r.energy));
    }
  }
}

TEST_CASE("verification detects a corrupted Poisson operator") {
  const ModelPtr good = make(ModelId::TimoshenkoFrictional, 16);
  const FlippedBlock bad(good);
  const VerificationReport r = verify_brackets(bad, 5, 3);
  CHECK(r.check("antisymmetry").residual > 1e-6);
  CHECK_FALSE(r.all_pass());
  CHECK(verify_brackets(*good, 5, 3).all_pass());
  CHECK_THROWS_AS(r.check("nosuch"), LookupError);
  CHECK_THROWS_AS(verify_brackets(*good, 0, 3), PreconditionError);
}

TEST_CASE("verification is deterministic for a fixed seed") {
  const ModelPtr m = make(ModelId::TimoshenkoNew, 16);
  const VerificationReport a = verify_model(*m, 3, 17);
  const VerificationReport b = verify_model(*m, 3, 17);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].residual == b.checks[i].residual);
  }
  CHECK(a.all_pass());
}

TEST_CASE("Jacobi residual") {
  std::mt19937_64 rng(21);
  SUBCASE("constant operators") {
    for (ModelId id : {ModelId::TimoshenkoHeatIII, ModelId::BresseHeatII}) {
      const ModelPtr m = make(id, 16);
      const State z = random_state(*m, rng);
      const auto f1 = random_test_functional(*m, rng);
      const auto f2 = random_test_functional(*m, rng);
      const auto f3 = random_test_functional(*m, rng);
      CHECK(jacobi_residual(*m, z, f1, f2, f3, 1e-5).relative() <= 1e-10);
    }
  }
  SUBCASE("state-dependent operator") {
    const ModelPtr m = make(ModelId::TimoshenkoNew, 16);
    for (int k = 0; k < 3; ++k) {
      const State z = random_state(*m, rng);
      const auto f1 = random_test_functional(*m, rng);
      const auto f2 = random_test_functional(*m, rng);
      const auto f3 = random_test_functional(*m, rng);
      const JacobiResult j = jacobi_residual(*m, z, f1, f2, f3, 1e-5);
      CHECK(j.relative() <= 1e-4);
      CHECK(j.scale >= 1.0);
      // repeated functional: the sum collapses by antisymmetry
      CHECK(jacobi_residual(*m, z, f1, f1, f3, 1e-5).relative() <= 1e-8);
    }
    const State z = random_state(*m, rng);
    const auto f = random_test_functional(*m, rng);
    CHECK_THROWS_AS(jacobi_residual(*m, z, f, f, f, 0.0), PreconditionError);
  }
  SUBCASE("test functional gradient matches finite differences") {
    const ModelPtr m = make(ModelId::BresseHeatI, 12);
    const auto f = random_test_functional(*m, rng);
    const State z = random_state(*m, rng);
    const Cotangent g = f.gradient(z);
    const Cotangent fd = fd_gradient([&](const State& s) { return f.value(s); }, z);
    double worst = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      worst = std::max(worst, std::abs(g.flat()[i] - fd.flat()[i]));
    }
    CHECK(worst <= 1e-6 * (1 + max_abs(g.flat())));
  }
}

TEST_CASE("coordinate scaling") {
  const ModelPtr m = make(ModelId::TimoshenkoFrictional, 32);
  State z0 = default_initial_state(m->id(), m->grid(), 1, 0.1);
  z0.set_reservoir(0.25);
  const IntegratorConfig c = config(*m, 1.0, 10);
  const std::size_t slots = m->layout()->num_fields() + 1;

  CHECK(transform_check(m, std::vector<double>(slots, 1.0), z0, c) == 0.0);
  CHECK(transform_check(m, std::vector<double>(slots, 2.0), z0, c) <= 1e-8);
  const std::vector<double> uneven{3.0, 0.37, 1.9, -0.8, 5.5};
  CHECK(transform_check(m, uneven, z0, c) <= 1e-10);

  std::vector<double> singular(slots, 1.0);
  singular[2] = 0.0;
  CHECK_THROWS_AS(transform_check(m, singular, z0, c), StructuralError);
  CHECK_THROWS_AS(make_scaled_model(m, {1.0, 2.0}), StructuralError);

  // the transformed building blocks are again a GENERIC system
  for (ModelId id : {ModelId::TimoshenkoNew, ModelId::BresseHeatII}) {
    const ModelPtr base = make(id, 16);
    std::vector<double> s;
    for (std::size_t i = 0; i < base->layout()->num_fields(); ++i) s.push_back(0.5 + 0.3 * i);
    if (base->layout()->has_reservoir()) s.push_back(1.7);
    const ModelPtr scaled_model = make_scaled_model(base, s);
    CAPTURE(to_string(id));
    CHECK(verify_model(*scaled_model, 3, 5).all_pass());
  }
}

TEST_CASE("decay rates") {
  const ModelPtr u = make(ModelId::TimoshenkoUndamped, 32);
  const auto ru = integrate(*u, default_initial_state(u->id(), u->grid(), 1, 0.1),
                            config(*u, 4.0, 10));
  CHECK(std::abs(decay_rate(ru)) <= 1e-6);

  const ModelPtr f = make(ModelId::TimoshenkoFrictional, 32);
  const auto rf = integrate(*f, default_initial_state(f->id(), f->grid(), 1, 0.1),
                            config(*f, 4.0, 10));
  const DecayFit fit = fit_decay(rf);
  CHECK(fit.rate < -1e-3);
  CHECK(fit.negative_windows == fit.windows);
  CHECK(fit.confidence > 0.99);

  CHECK_THROWS_AS(decay_rate(std::span(rf).first(9)), PreconditionError);
  auto broken = rf;
  broken.back().mech_energy = 0.0;
  CHECK_THROWS_AS(decay_rate(broken), DomainError);
}

TEST_CASE("Cattaneo elimination identity") {
  const ModelPtr m = make(ModelId::TimoshenkoHeatII, 32);
  State smooth = default_initial_state(m->id(), m->grid(), 1, 0.1);
  integrate(*m, smooth, config(*m, 0.2), [&](long, double, const State& s) { smooth = s; });
  CHECK(cattaneo_identity_residual(*m, smooth) <= 1e-6);

  // Grid-scale content: the probe's truncation error is about (omega h)^2 / 6
  // with omega ~ 2 / dx, so a finer probe step is needed.
  State rough = smooth;
  std::mt19937_64 rng(4);
  std::normal_distribution<double> noise(0.0, 0.01);
  for (double& v : rough.flat()) v += noise(rng);
  CHECK(cattaneo_identity_residual(*m, rough, 1e-4) > 1e-7);
  CHECK(cattaneo_identity_residual(*m, rough, 1e-5) <= 1e-6);

  CHECK_THROWS_AS(cattaneo_identity_residual(*make(ModelId::TimoshenkoHeatI), smooth),
                  PreconditionError);
  CHECK_THROWS_AS(cattaneo_identity_residual(*m, smooth, 0.0), PreconditionError);
}
