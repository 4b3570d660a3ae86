#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isomin/sphere.hpp"
#include "isomin/symeig.hpp"

namespace isomin {

/// h(e_a, e_b) = [Hess F(e_a, e_b) - <grad F, p> delta_ab] / |P grad F|.
/// The correction term turns the ambient Hessian into the spherical one; the
/// sign convention is relative to nu = +P grad F / |P grad F|.
SymMat4 second_form(const LevelSpec& spec, const TangentFrame& frame);

struct ThetaFit {
  double theta0 = 0.0;
  double residual = 0.0;  // sqrt(sum_k (lambda_k - cot((k-1)pi/g + theta0))^2)
};

/// Best theta0 in (0, pi/g) for distinct curvatures given in descending order
/// (one value per cluster, so distinct.size() == g). g = 1 returns the
/// convention theta0 = pi/2 with residual |lambda|.
ThetaFit fit_theta0(std::span<const double> distinct_descending, int g);

struct CurvatureReport {
  std::array<double, 4> lambdas{};  // ascending
  double f1 = 0, f2 = 0, f3 = 0, f4 = 0;
  double S = 0;  // = f2
  double K = 0;  // Gauss-Kronecker curvature, prod lambda_i
  double R = 0;  // scalar curvature, 12 + f1^2 - S
  int g = 0;     // number of curvature clusters
  std::vector<int> multiplicities;     // per cluster, descending curvature order
  std::vector<double> distinct;        // cluster means, descending
  std::optional<ThetaFit> theta0;      // only for isoparametric multiplicity patterns
};

constexpr double kDefaultClusterTol = 1e-4;

/// Invariants of an arbitrary curvature list (sorted internally). Clusters
/// split where consecutive sorted values differ by more than cluster_tol.
CurvatureReport report_from_curvatures(std::array<double, 4> lambdas,
                                       double cluster_tol = kDefaultClusterTol);

/// Principal curvatures and invariants of the level set at p.
CurvatureReport curvature_report(const LevelSpec& spec, const SpherePoint& p,
                                 double cluster_tol = kDefaultClusterTol);

enum class Verdict { equator, clifford_1_3, clifford_2_2, cartan, non_isoparametric, inconclusive };

std::string to_string(Verdict v);

struct SweepTolerances {
  double projection_tol = 1e-12;
  int max_iter = 100;
  double cluster_tol = kDefaultClusterTol;
  double invariant_tol = 1e-6;  // |f1| and |S - S_model| when matching the catalog
};

struct SurfaceStats {
  int n_points = 0;   // successfully projected samples
  int n_failed = 0;   // projections that did not converge or hit a focal point
  double max_abs_f1 = 0;
  double S_mean = 0, S_min = 0, S_max = 0;
  double f3_mean = 0, f3_spread = 0, f3_max_abs = 0;
  double K_mean = 0, K_min = 0, K_max = 0;
  double R_min = 0, R_max = 0;
  std::map<int, int> g_histogram;
  std::optional<double> theta0_mean, theta0_min, theta0_max, theta0_residual_max;
  Verdict classification_verdict = Verdict::inconclusive;
  std::vector<std::string> failure_samples;  // first few failure messages with sample index
};

/// Samples n uniform points of S^5, projects each onto the level set and
/// aggregates their curvature reports. Sample i uses RngStream(seed).split(i),
/// and aggregation runs in sample order, so results do not depend on the
/// worker count. Throws NumericalError when more than 10% of projections fail.
SurfaceStats sweep_analyze(const LevelSpec& spec, int n, std::uint64_t seed,
                           const SweepTolerances& tols = {}, int workers = 1);

}  // namespace isomin
