#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "isomin/catalog.hpp"
#include "isomin/error.hpp"
#include "isomin/sphere.hpp"

using namespace isomin;

namespace {

const LevelSpec kCartanHalf{ScalarFieldSpec::cartan_quartic(), 0.5};
const LevelSpec kEquator{ScalarFieldSpec::coordinate(5), 0.0};

void check_frame(const TangentFrame& f, double tol) {
  const Vec6& p = f.base.coords();
  CHECK(std::abs(norm(f.normal) - 1) <= tol);
  CHECK(std::abs(dot(f.normal, p)) <= tol);
  for (int a = 0; a < 4; ++a) {
    CHECK(std::abs(dot(f.e[a], p)) <= tol);
    CHECK(std::abs(dot(f.e[a], f.normal)) <= tol);
    for (int b = 0; b < 4; ++b) CHECK(std::abs(dot(f.e[a], f.e[b]) - (a == b ? 1.0 : 0.0)) <= tol);
  }
}

}  // namespace

TEST_CASE("projection onto the Cartan level 1/2 converges within 25 iterations") {
  gen::Engine e(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec6 x0 = gen::point(e, 2);
    const SpherePoint p = project_to_level(x0, kCartanHalf, 1e-12, 25);
    CHECK(std::abs(norm(p.coords()) - 1) <= 1e-12);
    CHECK(std::abs(kCartanHalf.field.value(p.coords()) - 0.5) <= 1e-12);
  }
}

TEST_CASE("projection onto the equator zeroes x6 and normalises") {
  const SpherePoint p = project_to_level({0.3, 0.4, 0, 0, 0, 0.5}, kEquator);
  CHECK(p[5] == 0.0);
  CHECK(std::abs(norm(p.coords()) - 1) <= 1e-15);
  CHECK(std::abs(p[0] - 0.6) <= 1e-15);
  CHECK(std::abs(p[1] - 0.8) <= 1e-15);
}

TEST_CASE("an unattainable Cartan level does not converge") {
  gen::Engine e(43);
  const LevelSpec spec{ScalarFieldSpec::cartan_quartic(), 2.0};
  for (int trial = 0; trial < 20; ++trial) {
    const Vec6 x0 = gen::point(e);
    CHECK_THROWS_AS(project_to_level(x0, spec), NoConvergence);
  }
}

TEST_CASE("projection preconditions") {
  CHECK_THROWS_AS(project_to_level({0, 0, 0, 0, 0, 0}, kEquator), InvalidArgument);
  CHECK_THROWS_AS(project_to_level({1, 0, 0, 0, 0, 0}, kEquator, 0.0), InvalidArgument);
}

TEST_CASE("a focal point is reported") {
  // At e1 the gradient of x1^2 is radial, so the tangential part vanishes.
  const auto sq = ScalarFieldSpec::polynomial(Polynomial::coordinate(0) * Polynomial::coordinate(0));
  const LevelSpec spec{sq, 1.0};
  CHECK_THROWS_AS(surface_normal(SpherePoint::from_unit({1, 0, 0, 0, 0, 0}), spec), FocalPoint);
}

TEST_CASE("property: projection is idempotent") {
  gen::Engine e(47);
  for (int trial = 0; trial < 200; ++trial) {
    const SpherePoint p = project_to_level(gen::point(e), kCartanHalf);
    const SpherePoint q = project_to_level(p.coords(), kCartanHalf);
    double moved = 0;
    for (int i = 0; i < 6; ++i) moved = std::max(moved, std::abs(p[i] - q[i]));
    CHECK(moved <= 1e-12);
  }
}

TEST_CASE("surface normal examples") {
  const Vec6 nu = surface_normal(SpherePoint::from_unit({1, 0, 0, 0, 0, 0}), kEquator);
  CHECK(nu == Vec6{0, 0, 0, 0, 0, 1});

  gen::Engine e(53);
  const auto twice = ScalarFieldSpec::polynomial(2.0 * ScalarFieldSpec::cartan_quartic().to_polynomial());
  const LevelSpec doubled{twice, 1.0};
  for (int trial = 0; trial < 100; ++trial) {
    const SpherePoint p = project_to_level(gen::point(e), kCartanHalf);
    const Vec6 n1 = surface_normal(p, kCartanHalf);
    CHECK(std::abs(norm(n1) - 1) <= 1e-12);
    CHECK(std::abs(dot(n1, p.coords())) <= 1e-12);
    const Vec6 n2 = surface_normal(p, doubled);
    for (int i = 0; i < 6; ++i) CHECK(std::abs(n1[i] - n2[i]) <= 1e-14);
  }
}

TEST_CASE("surface normal requires a point on the level set") {
  CHECK_THROWS_AS(surface_normal(SpherePoint::from_unit({0, 0, 0, 0, 0.6, 0.8}), kEquator), InvalidArgument);
}

TEST_CASE("tangent basis at e1 with normal e6 spans e2..e5") {
  const TangentFrame f = tangent_basis(SpherePoint::from_unit({1, 0, 0, 0, 0, 0}), {0, 0, 0, 0, 0, 1});
  for (int a = 0; a < 4; ++a) {
    Vec6 expect{};
    expect[a + 1] = 1;
    CHECK(f.e[a] == expect);
  }
  check_frame(f, 1e-12);
}

TEST_CASE("property: frames at 1000 Cartan points are orthonormal") {
  RngStream s(59);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = sample_sphere(s);
    s = d.next;
    const SpherePoint p = project_to_level(d.value.coords(), kCartanHalf);
    const TangentFrame f = tangent_basis(p, surface_normal(p, kCartanHalf));
    check_frame(f, 1e-12);
  }
}

TEST_CASE("tangent basis is bitwise deterministic") {
  gen::Engine e(61);
  for (int trial = 0; trial < 50; ++trial) {
    const SpherePoint p = project_to_level(gen::point(e), kCartanHalf);
    const Vec6 n = surface_normal(p, kCartanHalf);
    const TangentFrame a = tangent_basis(p, n);
    const TangentFrame b = tangent_basis(p, n);
    CHECK(a.e == b.e);
  }
}

TEST_CASE("tangent basis rejects an invalid normal") {
  const SpherePoint p = SpherePoint::from_unit({1, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(tangent_basis(p, {1, 0, 0, 0, 0, 0}), InvalidArgument);
  CHECK_THROWS_AS(tangent_basis(p, {0, 2, 0, 0, 0, 0}), InvalidArgument);
}

TEST_CASE("sphere samples are unit and deterministic") {
  const auto a = sample_sphere(RngStream(3));
  const auto b = sample_sphere(RngStream(3));
  CHECK(a.value.coords() == b.value.coords());
  CHECK(std::abs(norm(a.value.coords()) - 1) <= 1e-12);
  CHECK_THROWS_AS(SpherePoint::from_unit({1, 1, 0, 0, 0, 0}), InvalidArgument);
}
