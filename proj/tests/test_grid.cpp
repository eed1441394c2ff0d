#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "beamgeneric/errors.hpp"
#include "beamgeneric/grid.hpp"

using namespace beamgeneric;

namespace {

Field random_field(const Grid& g, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Field u(static_cast<std::size_t>(g.n()));
  for (double& v : u) v = normal(rng);
  return u;
}

double sum_abs_products(const Field& a, const Field& b, double dx) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] * b[i]);
  return std::max(1.0, dx * s);
}

}  // namespace

TEST_CASE("d1 of a constant vanishes") {
  const Grid g(4, 3.7);
  for (double v : g.d1(Field{2.5, 2.5, 2.5, 2.5})) CHECK(v == 0.0);
  for (double v : g.d2(Field{2.5, 2.5, 2.5, 2.5})) CHECK(v == 0.0);
}

TEST_CASE("d1 and d2 hand stencils on a four-node grid") {
  const Grid g(4, 1.0);
  const Field u{0, 1, 0, -1};
  const Field d1 = g.d1(u);
  const Field d2 = g.d2(u);
  const Field want1{4, 0, -4, 0};
  const Field want2{0, -32, 0, 32};
  for (int i = 0; i < 4; ++i) {
    CHECK(d1[i] == doctest::Approx(want1[i]).epsilon(1e-15));
    CHECK(d2[i] == doctest::Approx(want2[i]).epsilon(1e-15));
  }
}

TEST_CASE("forward and backward differences") {
  const Grid g(4, 1.0);
  const Field u{0, 1, 0, -1};
  const Field fp = g.dplus(u);
  const Field bm = g.dminus(u);
  const Field want_p{4, -4, -4, 4};
  const Field want_m{4, 4, -4, -4};
  for (int i = 0; i < 4; ++i) {
    CHECK(fp[i] == doctest::Approx(want_p[i]));
    CHECK(bm[i] == doctest::Approx(want_m[i]));
  }
  // d2 factors as dminus(dplus(.))
  const Field dd = g.dminus(g.dplus(u));
  const Field d2 = g.d2(u);
  for (int i = 0; i < 4; ++i) CHECK(dd[i] == doctest::Approx(d2[i]));
}

TEST_CASE("inner product examples") {
  CHECK(Grid(4, 1.0).inner(Field{1, 1, 1, 1}, Field{2, 2, 2, 2}) == doctest::Approx(2.0));
  CHECK(Grid(4, 1.0).inner(Field{0, 0, 0, 0}, Field{3, -1, 2, 5}) == 0.0);
  const Field u{1, 0, 1, 0, 1, 0, 1, 0};
  CHECK(Grid(8, 2.0).inner(u, u) == doctest::Approx(1.0));
}

TEST_CASE("adjointness holds to roundoff on random fields") {
  std::mt19937_64 rng(7);
  for (int n : {4, 5, 16, 63}) {
    const Grid g(n, 1.3);
    for (int t = 0; t < 20; ++t) {
      const Field u = random_field(g, rng);
      const Field v = random_field(g, rng);
      const Field d1u = g.d1(u), d1v = g.d1(v);
      const Field d2u = g.d2(u), d2v = g.d2(v);
      const Field dpu = g.dplus(u), dmv = g.dminus(v);
      CHECK(std::abs(g.inner(u, d1v) + g.inner(d1u, v)) <=
            1e-13 * (sum_abs_products(u, d1v, g.dx()) + sum_abs_products(d1u, v, g.dx())));
      CHECK(std::abs(g.inner(u, d2v) - g.inner(d2u, v)) <=
            1e-13 * (sum_abs_products(u, d2v, g.dx()) + sum_abs_products(d2u, v, g.dx())));
      CHECK(std::abs(g.inner(dpu, v) + g.inner(u, dmv)) <=
            1e-13 * (sum_abs_products(dpu, v, g.dx()) + sum_abs_products(u, dmv, g.dx())));
    }
  }
}

TEST_CASE("inner is positive definite") {
  std::mt19937_64 rng(3);
  const Grid g(9, 1.0);
  for (int t = 0; t < 10; ++t) {
    const Field u = random_field(g, rng);
    CHECK(g.norm2(u) > 0.0);
  }
}

TEST_CASE("grid validation and size checks") {
  CHECK_THROWS_AS(Grid(3, 1.0), ValidationError);
  CHECK_THROWS_AS(Grid(8, 0.0), ValidationError);
  CHECK_THROWS_AS(Grid(8, -1.0), ValidationError);
  const Grid g(4, 1.0);
  CHECK_THROWS_AS(g.d1(Field{1, 2, 3}), StructuralError);
  CHECK_THROWS_AS(g.d2(Field{1, 2, 3, 4, 5}), StructuralError);
  CHECK_THROWS_AS(g.inner(Field{1, 2, 3, 4}, Field{1, 2}), StructuralError);
  CHECK(g.dx() == 0.25);
}
