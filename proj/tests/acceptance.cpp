// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
// Criteria 1-3 and 5-10 go through the C API exactly as the command-line tool
// does; criteria 4 and 11 exercise library functions that have no C surface.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "isomin/catalog.hpp"
#include "isomin/error.hpp"
#include "isomin/identities.hpp"
#include "isomin/isomin.h"
#include "isomin/shape.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::json;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failed = 0;

void criterion(int id, const char* title, double time_limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit > 0 && secs > time_limit) {
    o.pass = false;
    o.detail += "; exceeded " + std::to_string(time_limit) + " s";
  }
  if (!o.pass) ++g_failed;
  std::printf("%s criterion %2d: %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
  std::fflush(stdout);
}

json run_cli(std::initializer_list<std::pair<const char*, const char*>> settings, int* exit_code = nullptr) {
  isomin_config* cfg = nullptr;
  if (isomin_config_create(&cfg) != ISOMIN_OK) throw std::runtime_error(isomin_last_error());
  for (const auto& [k, v] : settings) {
    if (isomin_config_set(cfg, k, v) != ISOMIN_OK) {
      isomin_config_destroy(cfg);
      throw std::runtime_error(isomin_last_error());
    }
  }
  isomin_config_set(cfg, "timing", "off");
  isomin_report* report = nullptr;
  const isomin_status st = isomin_run(cfg, &report);
  isomin_config_destroy(cfg);
  if (st != ISOMIN_OK) throw std::runtime_error(isomin_last_error());
  json doc = json::parse(isomin_report_text(report, ISOMIN_FORMAT_JSON));
  if (exit_code) *exit_code = isomin_report_exit_code(report);
  isomin_report_destroy(report);
  return doc;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome identity_sweep(const char* identity, const char* trials, bool want_exact) {
  int code = -1;
  const json doc = run_cli({{"command", "verify"}, {"identity", identity}, {"trials", trials}, {"seed", "1"}}, &code);
  const json& v = doc["results"].at(0);
  const bool ok = code == 0 && v["trials"] == std::stoll(trials) && v["failures"] == 0 &&
                  v["first_counterexample"].is_null() && v["exact"].get<bool>() == want_exact;
  return {ok, "trials=" + std::string(trials) + " failures=" + v["failures"].dump() + " exact=" + v["exact"].dump()};
}

std::array<double, 4> sorted(std::array<double, 4> v) {
  std::sort(v.begin(), v.end());
  return v;
}

isomin::SpherePoint sample(const isomin::LevelSpec& spec, std::mt19937_64& e) {
  std::normal_distribution<double> n;
  for (;;) {
    isomin::Vec6 x;
    for (double& c : x) c = n(e);
    try {
      return isomin::project_to_level(x, spec);
    } catch (const isomin::NumericalError&) {
    }
  }
}

}  // namespace

int main() {
  const double pi = std::numbers::pi;

  criterion(1, "Cartan minimal member t = pi/8, 1000 samples", 30, [&] {
    const json doc = run_cli({{"command", "analyze"}, {"surface", "cartan"}, {"t", "pi/8"}, {"samples", "1000"}});
    const json& r = doc["results"];
    const double f1 = r["max_abs_f1"], smin = r["S_min"], smax = r["S_max"], f3 = r["f3_max_abs"];
    const double kmin = r["K_min"], kmax = r["K_max"];
    const double th_min = r["theta0_min"], th_max = r["theta0_max"];
    const bool g4 = r["g_histogram"].size() == 1 && r["g_histogram"].value("4", 0) == 1000;
    const bool ok = r["n_points"] == 1000 && f1 <= 1e-8 && std::abs(smin - 12) <= 1e-6 && std::abs(smax - 12) <= 1e-6 &&
                    g4 && std::abs(th_min - pi / 8) <= 1e-6 && std::abs(th_max - pi / 8) <= 1e-6 && f3 <= 1e-6 &&
                    std::abs(kmin - 1) <= 1e-6 && std::abs(kmax - 1) <= 1e-6 && r["classification_verdict"] == "cartan";
    return Outcome{ok, "max|f1|=" + num(f1) + " S in [" + num(smin) + "," + num(smax) + "] g=4 at " +
                           std::to_string(r["g_histogram"].value("4", 0)) + " points, max|theta0-pi/8|=" +
                           num(std::max(std::abs(th_min - pi / 8), std::abs(th_max - pi / 8))) + " max|f3|=" + num(f3) +
                           " K in [" + num(kmin) + "," + num(kmax) + "]"};
  });

  criterion(2, "non-minimal control t = 0.3, 200 samples", 0, [&] {
    const json doc = run_cli({{"command", "analyze"}, {"surface", "cartan"}, {"t", "0.3"}, {"samples", "200"}});
    const json& r = doc["results"];
    const double f1 = r["max_abs_f1"];
    const bool ok = f1 > 1e-3 && r["classification_verdict"] == "non_isoparametric";
    return Outcome{ok, "max|f1|=" + num(f1) + " verdict=" + r["classification_verdict"].get<std::string>()};
  });

  criterion(3, "catalog S = {0,4,4,12}, R = {12,8,8,0}, all checks", 0, [&] {
    int code = -1;
    const json doc = run_cli({{"command", "catalog"}}, &code);
    std::vector<double> S, R;
    bool checks = true;
    for (const auto& m : doc["results"]) {
      S.push_back(m["S_expected"]);
      R.push_back(m["R"]);
      for (const auto& [k, v] : m["checks"].items()) checks = checks && v.get<bool>();
    }
    const bool ok = code == 0 && S == std::vector<double>{0, 4, 4, 12} && R == std::vector<double>{12, 8, 8, 0} && checks;
    return Outcome{ok, "S=" + json(S).dump() + " R=" + json(R).dump() + " checks=" + (checks ? "all true" : "some false")};
  });

  criterion(4, "two-curvature solutions match the Clifford catalog", 0, [&] {
    using namespace isomin;
    bool ok = true;
    double worst = 0;
    const struct {
      int k;
      double lambda, mu;
      IsoModel model;
    } cases[] = {{1, std::sqrt(3.0), -1 / std::sqrt(3.0), clifford_model(1, 3)}, {2, 1.0, -1.0, clifford_model(2, 2)}};
    for (const auto& c : cases) {
      const Rational S = make_rational(4);
      const auto branches = g2_solve(c.k, S);
      const TwoCurvatureBranch& b = branches[0];
      const double dl = std::abs(b.lambda.value() - c.lambda), dm = std::abs(b.mu.value() - c.mu);
      const double cl = std::abs(b.lambda.value() - c.model.curvatures[0].convert_to<double>());
      const double cm = std::abs(b.mu.value() - c.model.curvatures[1].convert_to<double>());
      worst = std::max({worst, dl, dm, cl, cm});
      ok = ok && dl <= 1e-12 && dm <= 1e-12 && cl <= 1e-12 && cm <= 1e-12;
      for (const auto& br : branches) ok = ok && g2_branch_satisfies(c.k, S, br);
    }
    return Outcome{ok, "max deviation " + num(worst) + ", both branches exact"};
  });

  criterion(5, "three-curvature kernel trivial on 10^3 inputs", 5, [&] { return identity_sweep("g3", "1000", true); });
  criterion(6, "Vandermonde elimination == closed formula on 10^4 inputs", 60,
            [&] { return identity_sweep("vandermonde", "10000", true); });
  criterion(7, "I_l closed forms == definition on 10^4 inputs", 0,
            [&] { return identity_sweep("i-closed", "10000", true); });
  criterion(8, "I_l <= 0 on 10^5 ordered quadruples", 120, [&] { return identity_sweep("i-sign", "100000", true); });
  criterion(9, "d psi coefficient == R/2 - sum I_l on 10^4 tables", 0,
            [&] { return identity_sweep("dpsi", "10000", true); });

  criterion(10, "curvature recovery from invariants", 0, [&] {
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
    double a[4], b[4];
    if (isomin_recover_curvatures(0, 12, 0, 1, a) != ISOMIN_OK ||
        isomin_recover_curvatures(0, 4, 8 * r3 / 3, -1.0 / 3, b) != ISOMIN_OK)
      return Outcome{false, isomin_last_error()};
    const double ea[4] = {-1 - r2, 1 - r2, r2 - 1, 1 + r2};
    const double eb[4] = {-1 / r3, -1 / r3, -1 / r3, r3};
    double worst = 0;
    for (int i = 0; i < 4; ++i) worst = std::max({worst, std::abs(a[i] - ea[i]), std::abs(b[i] - eb[i])});
    return Outcome{worst <= 1e-9, "max deviation " + num(worst)};
  });

  criterion(11, "orientation and frame invariance on 500 points at 1e-10", 0, [&] {
    using namespace isomin;
    std::mt19937_64 e(2024);
    std::uniform_real_distribution<double> u(-1, 1);
    double worst_orient = 0, worst_frame = 0;
    bool discrete_ok = true;
    const LevelSpec specs[] = {{ScalarFieldSpec::cartan_quartic(), cartan_level(pi / 8)},
                               {ScalarFieldSpec::cartan_quartic(), cartan_level(0.3)}};
    for (int trial = 0; trial < 500; ++trial) {
      const LevelSpec& spec = specs[trial % 2];
      const SpherePoint p = sample(spec, e);
      const TangentFrame f = tangent_basis(p, surface_normal(p, spec));
      const SymMat4 h = second_form(spec, f);

      const auto up = report_from_curvatures(sym_eigen(h).values);
      const auto down = report_from_curvatures(sym_eigen(h.negated()).values);
      worst_orient = std::max({worst_orient, std::abs(up.f1 + down.f1), std::abs(up.f3 + down.f3),
                               std::abs(up.f2 - down.f2), std::abs(up.f4 - down.f4), std::abs(up.K - down.K)});
      std::vector<int> rev(down.multiplicities.rbegin(), down.multiplicities.rend());
      discrete_ok = discrete_ok && up.g == down.g && up.multiplicities == rev;

      // Second frame: random orthogonal mix of the first.
      std::array<std::array<double, 4>, 4> q;
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) q[a][b] = u(e);
        for (int c = 0; c < a; ++c) {
          double d = 0;
          for (int b = 0; b < 4; ++b) d += q[a][b] * q[c][b];
          for (int b = 0; b < 4; ++b) q[a][b] -= d * q[c][b];
        }
        double n = 0;
        for (int b = 0; b < 4; ++b) n += q[a][b] * q[a][b];
        for (int b = 0; b < 4; ++b) q[a][b] /= std::sqrt(n);
      }
      TangentFrame g = f;
      for (int a = 0; a < 4; ++a) {
        Vec6 v{};
        for (int b = 0; b < 4; ++b)
          for (int i = 0; i < 6; ++i) v[i] += q[a][b] * f.e[b][i];
        g.e[a] = v;
      }
      const auto l1 = sorted(sym_eigen(h).values);
      const auto l2 = sorted(sym_eigen(second_form(spec, g)).values);
      for (int i = 0; i < 4; ++i) worst_frame = std::max(worst_frame, std::abs(l1[i] - l2[i]));
    }
    const bool ok = worst_orient <= 1e-10 && worst_frame <= 1e-10 && discrete_ok;
    return Outcome{ok, "orientation max dev " + num(worst_orient) + ", frame max dev " + num(worst_frame)};
  });

  std::printf("%d criterion(s) failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
