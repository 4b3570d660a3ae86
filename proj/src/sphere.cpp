#include "isomin/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isomin/error.hpp"

namespace isomin {
namespace {

constexpr double kFocalThreshold = 1e-10;
constexpr double kMaxStep = 0.3;

Vec6 unit(int axis) {
  Vec6 v{};
  v[axis] = 1.0;
  return v;
}

void subtract_projection(Vec6& v, const Vec6& onto) {
  const double c = dot(v, onto);
  for (int i = 0; i < 6; ++i) v[i] -= c * onto[i];
}

}  // namespace

double dot(const Vec6& a, const Vec6& b) {
  double s = 0.0;
  for (int i = 0; i < 6; ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec6& a) { return std::sqrt(dot(a, a)); }

SpherePoint SpherePoint::from_unit(const Vec6& x) {
  const double n = norm(x);
  if (!(std::abs(n - 1.0) <= 1e-12)) throw InvalidArgument("point is not on the unit sphere");
  return SpherePoint(x);
}

SpherePoint SpherePoint::normalized(const Vec6& x) {
  const double n = norm(x);
  if (!std::isfinite(n) || n == 0.0) throw InvalidArgument("cannot normalise a zero or non-finite vector");
  Vec6 y;
  for (int i = 0; i < 6; ++i) y[i] = x[i] / n;
  return SpherePoint(y);
}

Vec6 tangential_gradient(const SpherePoint& p, const Vec6& grad) {
  Vec6 t = grad;
  subtract_projection(t, p.coords());
  return t;
}

namespace {

// For F = x_i the level set is a small sphere: fix x_i and rescale the rest.
SpherePoint project_to_coordinate_level(const Vec6& x0, const LevelSpec& spec) {
  const int axis = spec.field.axis();
  const double c = spec.level;
  if (std::abs(c) > 1.0)
    throw NoConvergence("level " + std::to_string(c) + " is not attained on the sphere", std::abs(c) - 1.0);
  Vec6 x = x0;
  x[axis] = 0.0;
  const double rest = norm(x);
  if (std::abs(c) == 1.0 || rest < kFocalThreshold)
    throw FocalPoint("projection onto a coordinate level reached a focal point");
  const double scale = std::sqrt(1.0 - c * c) / rest;
  for (double& v : x) v *= scale;
  x[axis] = c;
  return SpherePoint::normalized(x);
}

}  // namespace

SpherePoint project_to_level(const Vec6& x0, const LevelSpec& spec, double tol, int max_iter) {
  if (!(tol > 0.0)) throw InvalidArgument("projection tolerance must be positive");
  if (max_iter < 1) throw InvalidArgument("projection needs max_iter >= 1");
  if (const double n0 = norm(x0); !std::isfinite(n0) || n0 == 0.0)
    throw InvalidArgument("projection needs a finite non-zero start point");

  if (spec.field.kind() == ScalarFieldSpec::Kind::coordinate) return project_to_coordinate_level(x0, spec);

  Vec6 x = x0;
  double residual = 0.0;
  for (int iter = 0; iter <= max_iter; ++iter) {
    const SpherePoint p = SpherePoint::normalized(x);
    const auto jet = spec.field.eval2(p.coords());
    residual = jet.value() - spec.level;
    if (std::abs(residual) <= tol && std::abs(norm(p.coords()) - 1.0) <= tol) return p;
    if (iter == max_iter) break;

    const Vec6 tg = tangential_gradient(p, jet.grad());
    const double tg_norm = norm(tg);
    if (tg_norm < kFocalThreshold)
      throw FocalPoint("tangential gradient vanishes during projection (|P grad F| = " +
                       std::to_string(tg_norm) + ")");
    double step = -residual / tg_norm;
    step = std::clamp(step, -kMaxStep, kMaxStep);
    for (int i = 0; i < 6; ++i) x[i] = p[i] + step * tg[i] / tg_norm;
  }
  throw NoConvergence("projection did not converge after " + std::to_string(max_iter) +
                          " iterations (|F - level| = " + std::to_string(std::abs(residual)) + ")",
                      std::abs(residual));
}

Vec6 surface_normal(const SpherePoint& p, const LevelSpec& spec) {
  const auto jet = spec.field.eval2(p.coords());
  if (!(std::abs(jet.value() - spec.level) <= 1e-8))
    throw InvalidArgument("point is not on the level set");
  Vec6 tg = tangential_gradient(p, jet.grad());
  const double n = norm(tg);
  if (n < kFocalThreshold) throw FocalPoint("focal point: tangential gradient vanishes");
  for (double& c : tg) c /= n;
  return tg;
}

TangentFrame tangent_basis(const SpherePoint& p, const Vec6& normal) {
  if (std::abs(norm(normal) - 1.0) > 1e-10 || std::abs(dot(normal, p.coords())) > 1e-10)
    throw InvalidArgument("normal must be a unit vector orthogonal to the base point");

  std::array<Vec6, 6> basis;
  basis[0] = p.coords();
  basis[1] = normal;
  int count = 2;
  for (int axis = 0; axis < 6 && count < 6; ++axis) {
    Vec6 v = unit(axis);
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k < count; ++k) subtract_projection(v, basis[k]);
    const double n = norm(v);
    if (n < 1e-6) continue;
    for (double& c : v) c /= n;
    basis[count++] = v;
  }
  // Six seeds spanning R^6 always leave four survivors.
  return TangentFrame{p, normal, {basis[2], basis[3], basis[4], basis[5]}};
}

Draw<SpherePoint> sample_sphere(const RngStream& s) {
  RngStream cur = s;
  for (;;) {
    Vec6 g;
    for (double& c : g) {
      auto d = draw_normal(cur);
      c = d.value;
      cur = d.next;
    }
    if (norm(g) > 1e-8) return {SpherePoint::normalized(g), cur};
  }
}

}  // namespace isomin
