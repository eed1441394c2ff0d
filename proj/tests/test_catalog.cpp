#include <doctest.h>

#include <cmath>

#include "beamgeneric/catalog.hpp"
#include "beamgeneric/engine.hpp"
#include "beamgeneric/errors.hpp"
#include "beamgeneric/functionals.hpp"

using namespace beamgeneric;
using F = FieldName;

TEST_CASE("layouts") {
  const Grid g(8, 1.0);
  using V = std::vector<F>;
  CHECK(make_layout(ModelId::TimoshenkoUndamped, g)->field_order() == V{F::phi, F::psi, F::p, F::q});
  CHECK(make_layout(ModelId::TimoshenkoHeatII, g)->field_order() ==
        V{F::phi, F::psi, F::p, F::q, F::theta, F::s});
  CHECK(make_layout(ModelId::TimoshenkoHeatIII, g)->field_order() ==
        V{F::phi, F::psi, F::p, F::q, F::theta, F::w});
  CHECK(make_layout(ModelId::BresseHeatI, g)->field_order() ==
        V{F::phi, F::psi, F::chi, F::p, F::q, F::w, F::theta});
  const ModelPtr n = build_model(ModelId::TimoshenkoNew, {}, g);
  CHECK_FALSE(n->layout()->has_reservoir());
  CHECK(n->log_entropy());
  const ModelPtr b = build_model(ModelId::BresseHeatII, {}, g);
  CHECK(b->layout()->contains(F::theta));
  CHECK(b->layout()->contains(F::eta));
  for (ModelId id : all_model_ids()) {
    if (id != ModelId::TimoshenkoNew) CHECK(make_layout(id, g)->has_reservoir());
  }
}

TEST_CASE("parameter validation") {
  const Grid g(8, 1.0);
  ModelParams p;
  p.k = 0;
  CHECK_THROWS_AS(build_model(ModelId::TimoshenkoFrictional, p, g), ValidationError);
  p = {};
  p.l = 0;
  CHECK_NOTHROW(build_model(ModelId::TimoshenkoFrictional, p, g));
  CHECK_THROWS_AS(build_model(ModelId::BresseFrictional, p, g), ValidationError);
  p = {};
  p.delta1 = -1;
  p.b = -2;
  try {
    build_model(ModelId::TimoshenkoFrictional, p, g);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("delta1") != std::string::npos);
    CHECK(msg.find("b") != std::string::npos);
  }
  p = {};
  p.alpha = 0;
  CHECK_THROWS_AS(build_model(ModelId::TimoshenkoHeatI, p, g), ValidationError);
  CHECK_THROWS_AS(p.set("kapa", 1.0), ValidationError);
  p.set("kappa2", 0.25);
  CHECK(p.get("kappa2") == 0.25);
}

TEST_CASE("model names") {
  for (ModelId id : all_model_ids()) CHECK(parse_model_id(to_string(id)) == id);
  CHECK(parse_model_id("timoshenko-heat1") == ModelId::TimoshenkoHeatI);
  CHECK(parse_model_id("bresse-heat2") == ModelId::BresseHeatII);
  CHECK(parse_model_id("BRESSEFRICTIONAL") == ModelId::BresseFrictional);
  CHECK_FALSE(parse_model_id("nosuch").has_value());
  CHECK(all_model_ids().size() == 10);
}

TEST_CASE("default initial states") {
  const Grid g(64, 1.0);
  for (ModelId id : all_model_ids()) {
    CAPTURE(to_string(id));
    const State rest = default_initial_state(id, g, 1, 0.0);
    const ModelPtr m = build_model(id, {}, g);
    CHECK(max_abs(generic_rhs(*m, rest).flat()) == 0.0);
    const State z = default_initial_state(id, g, 1, 0.1);
    CHECK(m->mech_energy(z) > 0.0);
    for (F f : {F::p, F::q}) CHECK(max_abs(z.field(f)) == 0.0);
  }
  const State n = default_initial_state(ModelId::TimoshenkoNew, g, 3, 0.2);
  CHECK(theta_min(n).value() == 1.0);
  CHECK(n.get_field(F::phi)[16] == doctest::Approx(0.2 * std::sin(2 * M_PI * 3 * 0.25)));
  CHECK_THROWS_AS(default_initial_state(ModelId::TimoshenkoHeatI, g, 0, 0.1), PreconditionError);
}

TEST_CASE("every model passes the bracket checks") {
  const Grid g(16, 1.0);
  for (ModelId id : all_model_ids()) {
    const ModelPtr m = build_model(id, {}, g);
    const VerificationReport r = verify_brackets(*m, 5, 99);
    CAPTURE(to_string(id));
    CHECK(r.all_pass());
    CHECK(r.checks.size() == 5);
  }
}

TEST_CASE("stability bound scales like dx squared for parabolic models") {
  const double coarse = build_model(ModelId::TimoshenkoHeatI, {}, Grid(32, 1.0))->dt_bound();
  const double fine = build_model(ModelId::TimoshenkoHeatI, {}, Grid(64, 1.0))->dt_bound();
  CHECK(fine == doctest::Approx(coarse / 4).epsilon(1e-12));
  CHECK(build_model(ModelId::TimoshenkoFrictional, {}, Grid(64, 1.0))->dt_bound() > 1e-3);
}
