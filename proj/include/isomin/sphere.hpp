#pragma once

#include <array>

#include "isomin/field.hpp"
#include "isomin/rng.hpp"

namespace isomin {

double dot(const Vec6& a, const Vec6& b);
double norm(const Vec6& a);

/// A point of the unit 5-sphere (|coords| = 1 within 1e-12).
class SpherePoint {
 public:
  /// Throws InvalidArgument unless | |x| - 1 | <= 1e-12.
  static SpherePoint from_unit(const Vec6& x);
  /// x / |x|; throws InvalidArgument for zero or non-finite x.
  static SpherePoint normalized(const Vec6& x);

  const Vec6& coords() const { return x_; }
  double operator[](int i) const { return x_[i]; }

 private:
  explicit SpherePoint(const Vec6& x) : x_(x) {}
  Vec6 x_;
};

/// {x in S^5 : field(x) = level}.
struct LevelSpec {
  ScalarFieldSpec field;
  double level = 0.0;
};

/// Orthonormal basis e[0..3] of the tangent space of the level hypersurface
/// at base, completed by the unit normal (tangent to S^5) and base itself.
struct TangentFrame {
  SpherePoint base;
  Vec6 normal;
  std::array<Vec6, 4> e;
};

/// Tangential gradient P grad F with P v = v - <v, p> p.
Vec6 tangential_gradient(const SpherePoint& p, const Vec6& grad);

/// Newton projection onto the level set. The sphere constraint is enforced
/// exactly by renormalising every iterate; the level constraint is corrected
/// along the unit tangential gradient, so each step moves within
/// span{p, P grad F}. Steps are capped at 0.3 in length.
///
/// Throws NoConvergence (with the last |F - level|) after max_iter steps and
/// FocalPoint when |P grad F| < 1e-10.
SpherePoint project_to_level(const Vec6& x0, const LevelSpec& spec, double tol = 1e-12,
                             int max_iter = 100);

/// nu = P grad F / |P grad F|. Requires |F(p) - level| <= 1e-8.
Vec6 surface_normal(const SpherePoint& p, const LevelSpec& spec);

/// Gram-Schmidt (two passes) of the coordinate vectors e1..e6, in that order,
/// against {p, normal}; seeds whose residual norm is below 1e-6 are skipped.
TangentFrame tangent_basis(const SpherePoint& p, const Vec6& normal);

/// Uniform point on S^5 from six normalised Gaussians.
Draw<SpherePoint> sample_sphere(const RngStream& s);

}  // namespace isomin
