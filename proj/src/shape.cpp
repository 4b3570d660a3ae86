#include "isomin/shape.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "isomin/catalog.hpp"
#include "isomin/error.hpp"

namespace isomin {
namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

bool isoparametric_pattern(const std::vector<int>& m) {
  const int g = static_cast<int>(m.size());
  if (g != 1 && g != 2 && g != 3 && g != 4 && g != 6) return false;
  for (int k = 0; k < g; ++k)
    if (m[k] != m[(k + 2) % g]) return false;
  return true;
}

double cot(double x) { return std::cos(x) / std::sin(x); }

struct Signature {
  Verdict verdict;
  int g;
  std::vector<int> multiplicities;  // sorted
  double S;
};

std::vector<Signature> catalog_signatures() {
  std::vector<Signature> out;
  for (const auto& m : all_models()) {
    Verdict v = Verdict::inconclusive;
    switch (m.name) {
      case ModelName::equator:
        v = Verdict::equator;
        break;
      case ModelName::clifford:
        v = m.r == 1 ? Verdict::clifford_1_3 : Verdict::clifford_2_2;
        break;
      case ModelName::cartan:
        v = Verdict::cartan;
        break;
    }
    auto mult = m.multiplicities;
    std::sort(mult.begin(), mult.end());
    out.push_back({v, m.g, mult, m.s_expected.convert_to<double>()});
  }
  return out;
}

bool matches(const Signature& sig, const CurvatureReport& r, double tol) {
  if (r.g != sig.g || std::abs(r.f1) > tol || std::abs(r.S - sig.S) > tol) return false;
  auto mult = r.multiplicities;
  std::sort(mult.begin(), mult.end());
  return mult == sig.multiplicities;
}

}  // namespace

SymMat4 second_form(const LevelSpec& spec, const TangentFrame& frame) {
  const Vec6& p = frame.base.coords();
  const auto jet = spec.field.eval2(p);
  const Vec6 tg = tangential_gradient(frame.base, jet.grad());
  const double tg_norm = norm(tg);
  if (tg_norm < 1e-10) throw FocalPoint("focal point: tangential gradient vanishes");
  const double radial = dot(jet.grad(), p);

  SymMat4 h;
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) {
      double hess_ab = 0.0;
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) hess_ab += frame.e[a][i] * jet.hess(i, j) * frame.e[b][j];
      if (a == b) hess_ab -= radial;
      h.set(a, b, hess_ab / tg_norm);
    }
  }
  return h;
}

ThetaFit fit_theta0(std::span<const double> lam, int g) {
  if (g < 1 || static_cast<int>(lam.size()) != g)
    throw InvalidArgument("fit_theta0 needs exactly g distinct curvatures");
  for (std::size_t k = 1; k < lam.size(); ++k)
    if (!(lam[k - 1] > lam[k])) throw InvalidArgument("fit_theta0 needs strictly descending curvatures");
  if (g == 1) return {std::numbers::pi / 2, std::abs(lam[0])};

  const double period = std::numbers::pi / g;
  auto objective = [&](double th) {
    double s = 0.0;
    for (int k = 0; k < g; ++k) {
      const double d = lam[k] - cot(k * period + th);
      s += d * d;
    }
    return s;
  };

  // Coarse scan of the open interval, then a bracketed Brent search.
  constexpr int kGrid = 720;
  const double h = period / kGrid;
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGrid; ++i) {
    const double v = objective((i + 0.5) * h);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double lo = std::max(best * h, period * 1e-12);
  const double hi = std::min((best + 1.0) * h, period * (1 - 1e-12));
  auto [theta, val] = boost::math::tools::brent_find_minima(
      objective, lo, hi, std::numeric_limits<double>::digits / 2);

  // Newton polish on the derivative; Brent alone only resolves theta to
  // about sqrt(eps).
  for (int it = 0; it < 8; ++it) {
    double d1 = 0.0, d2 = 0.0;
    for (int k = 0; k < g; ++k) {
      const double c = cot(k * period + theta);
      const double w = 1.0 + c * c;
      d1 += 2.0 * (lam[k] - c) * w;
      d2 += 2.0 * (w * w - 2.0 * c * (lam[k] - c) * w);
    }
    if (!(d2 > 0.0)) break;
    const double next = theta - d1 / d2;
    if (!(next > lo - h && next < hi + h) || next <= 0.0 || next >= period) break;
    const double next_val = objective(next);
    if (next_val > val) break;
    theta = next;
    val = next_val;
  }
  return {theta, std::sqrt(val)};
}

CurvatureReport report_from_curvatures(std::array<double, 4> lambdas, double cluster_tol) {
  if (!(cluster_tol > 0.0)) throw InvalidArgument("cluster tolerance must be positive");
  std::sort(lambdas.begin(), lambdas.end());
  CurvatureReport r;
  r.lambdas = lambdas;
  r.K = 1.0;
  for (double l : lambdas) {
    r.f1 += l;
    r.f2 += l * l;
    r.f3 += l * l * l;
    r.f4 += l * l * l * l;
    r.K *= l;
  }
  r.S = r.f2;
  r.R = 12.0 + r.f1 * r.f1 - r.S;

  // Gap clustering from the top so clusters come out in descending order.
  std::vector<std::vector<double>> clusters;
  for (int i = 3; i >= 0; --i) {
    if (clusters.empty() || clusters.back().back() - lambdas[i] > cluster_tol)
      clusters.push_back({lambdas[i]});
    else
      clusters.back().push_back(lambdas[i]);
  }
  r.g = static_cast<int>(clusters.size());
  for (const auto& c : clusters) {
    r.multiplicities.push_back(static_cast<int>(c.size()));
    double s = 0.0;
    for (double v : c) s += v;
    r.distinct.push_back(s / c.size());
  }
  if (isoparametric_pattern(r.multiplicities)) r.theta0 = fit_theta0(r.distinct, r.g);
  return r;
}

CurvatureReport curvature_report(const LevelSpec& spec, const SpherePoint& p, double cluster_tol) {
  const Vec6 nu = surface_normal(p, spec);
  const TangentFrame frame = tangent_basis(p, nu);
  const SymEigen eig = sym_eigen(second_form(spec, frame));
  return report_from_curvatures(eig.values, cluster_tol);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equator:
      return "equator";
    case Verdict::clifford_1_3:
      return "clifford_1_3";
    case Verdict::clifford_2_2:
      return "clifford_2_2";
    case Verdict::cartan:
      return "cartan";
    case Verdict::non_isoparametric:
      return "non_isoparametric";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

SurfaceStats sweep_analyze(const LevelSpec& spec, int n, std::uint64_t seed,
                           const SweepTolerances& tols, int workers) {
  if (n < 1) throw InvalidArgument("sweep needs at least one sample");
  if (workers < 1) throw InvalidArgument("sweep needs at least one worker");

  struct Sample {
    std::optional<CurvatureReport> report;
    std::string failure;
  };
  std::vector<Sample> samples(n);
  const RngStream root(seed);

  auto work = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      try {
        const auto start = sample_sphere(root.split(static_cast<std::uint64_t>(i))).value;
        const SpherePoint p =
            project_to_level(start.coords(), spec, tols.projection_tol, tols.max_iter);
        samples[i].report = curvature_report(spec, p, tols.cluster_tol);
      } catch (const NumericalError& e) {
        samples[i].failure = "sample " + std::to_string(i) + ": " + e.what();
      }
    }
  };

  workers = std::min(workers, n);
  if (workers == 1) {
    work(0, n);
  } else {
    std::vector<std::jthread> pool;
    const int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int b = w * chunk, e = std::min(n, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
  }

  SurfaceStats st;
  CompensatedSum s_sum, f3_sum, k_sum, th_sum;
  int th_count = 0;
  double f3_min = 0, f3_max = 0;
  const auto sigs = catalog_signatures();
  std::vector<bool> sig_ok(sigs.size(), true);
  bool f1_violation = false;

  for (const auto& smp : samples) {
    if (!smp.report) {
      ++st.n_failed;
      if (st.failure_samples.size() < 5) st.failure_samples.push_back(smp.failure);
      continue;
    }
    const auto& r = *smp.report;
    const bool first = st.n_points == 0;
    ++st.n_points;
    st.max_abs_f1 = std::max(st.max_abs_f1, std::abs(r.f1));
    f1_violation = f1_violation || std::abs(r.f1) > tols.invariant_tol;
    s_sum.add(r.S);
    f3_sum.add(r.f3);
    k_sum.add(r.K);
    st.S_min = first ? r.S : std::min(st.S_min, r.S);
    st.S_max = first ? r.S : std::max(st.S_max, r.S);
    f3_min = first ? r.f3 : std::min(f3_min, r.f3);
    f3_max = first ? r.f3 : std::max(f3_max, r.f3);
    st.K_min = first ? r.K : std::min(st.K_min, r.K);
    st.K_max = first ? r.K : std::max(st.K_max, r.K);
    st.R_min = first ? r.R : std::min(st.R_min, r.R);
    st.R_max = first ? r.R : std::max(st.R_max, r.R);
    st.g_histogram[r.g] += 1;
    if (r.theta0) {
      th_sum.add(r.theta0->theta0);
      st.theta0_min = th_count == 0 ? r.theta0->theta0 : std::min(*st.theta0_min, r.theta0->theta0);
      st.theta0_max = th_count == 0 ? r.theta0->theta0 : std::max(*st.theta0_max, r.theta0->theta0);
      st.theta0_residual_max =
          th_count == 0 ? r.theta0->residual : std::max(*st.theta0_residual_max, r.theta0->residual);
      ++th_count;
    }
    for (std::size_t k = 0; k < sigs.size(); ++k)
      sig_ok[k] = sig_ok[k] && matches(sigs[k], r, tols.invariant_tol);
  }

  if (st.n_failed * 10 > n || st.n_points == 0) {
    std::string msg = std::to_string(st.n_failed) + " of " + std::to_string(n) +
                      " projections failed (limit 10%)";
    if (!st.failure_samples.empty()) msg += "; first: " + st.failure_samples.front();
    throw NumericalError(msg);
  }

  st.S_mean = s_sum.value() / st.n_points;
  st.f3_mean = f3_sum.value() / st.n_points;
  st.K_mean = k_sum.value() / st.n_points;
  st.f3_spread = f3_max - f3_min;
  st.f3_max_abs = std::max(std::abs(f3_min), std::abs(f3_max));
  if (th_count > 0) st.theta0_mean = th_sum.value() / th_count;

  st.classification_verdict = Verdict::inconclusive;
  for (std::size_t k = 0; k < sigs.size(); ++k) {
    if (sig_ok[k]) {
      st.classification_verdict = sigs[k].verdict;
      break;
    }
  }
  if (st.classification_verdict == Verdict::inconclusive && f1_violation)
    st.classification_verdict = Verdict::non_isoparametric;
  return st;
}

}  // namespace isomin
