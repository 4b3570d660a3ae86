#include "isomin/isomin.h"

#include <exception>
#include <memory>
#include <optional>
#include <string>

#include "isomin/error.hpp"
#include "isomin/identities.hpp"
#include "isomin/run.hpp"
#include "isomin/shape.hpp"

struct isomin_config {
  isomin::RunConfig cfg;
};

struct isomin_report {
  isomin::Report report;
  isomin::Format format;
  std::string json;
  std::string csv;
};

struct isomin_surface {
  isomin::LevelSpec spec;
};

namespace {

thread_local std::string last_error;

isomin_status fail(isomin_status code, const char* what) {
  last_error = what;
  return code;
}

// Maps the exception in flight to a status code.
isomin_status translate() {
  try {
    throw;
  } catch (const isomin::InvalidArgument& e) {
    return fail(ISOMIN_ERR_CONFIG, e.what());
  } catch (const isomin::NumericalError& e) {
    return fail(ISOMIN_ERR_NUMERIC, e.what());
  } catch (const std::exception& e) {
    return fail(ISOMIN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ISOMIN_ERR_INTERNAL, "unknown error");
  }
}

template <class F>
isomin_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return ISOMIN_OK;
  } catch (...) {
    return translate();
  }
}

isomin::Vec6 to_vec(const double* x) {
  isomin::Vec6 v;
  for (int i = 0; i < 6; ++i) v[i] = x[i];
  return v;
}

}  // namespace

extern "C" {

const char* isomin_version(void) { return "1.0.0"; }

const char* isomin_last_error(void) { return last_error.c_str(); }

isomin_status isomin_config_create(isomin_config** out) {
  if (!out) return fail(ISOMIN_ERR_CONFIG, "null output pointer");
  return guarded([&] { *out = new isomin_config{}; });
}

void isomin_config_destroy(isomin_config* cfg) { delete cfg; }

isomin_status isomin_config_set(isomin_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return fail(ISOMIN_ERR_CONFIG, "null argument");
  return guarded([&] { cfg->cfg.set(key, value); });
}

isomin_status isomin_run(const isomin_config* cfg, isomin_report** out) {
  if (!cfg || !out) return fail(ISOMIN_ERR_CONFIG, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto rep = std::make_unique<isomin_report>();
    rep->report = isomin::run(cfg->cfg);
    rep->format = cfg->cfg.format;
    rep->json = rep->report.render(isomin::Format::json);
    rep->csv = rep->report.render(isomin::Format::csv);
    *out = rep.release();
  });
}

int isomin_report_exit_code(const isomin_report* report) {
  return report ? report->report.exit_code : ISOMIN_ERR_CONFIG;
}

const char* isomin_report_text(const isomin_report* report, isomin_format format) {
  if (!report) return "";
  return format == ISOMIN_FORMAT_CSV ? report->csv.c_str() : report->json.c_str();
}

isomin_format isomin_report_format(const isomin_report* report) {
  return report && report->format == isomin::Format::csv ? ISOMIN_FORMAT_CSV : ISOMIN_FORMAT_JSON;
}

void isomin_report_destroy(isomin_report* report) { delete report; }

isomin_status isomin_surface_create(const char* name, double t, isomin_surface** out) {
  if (!name || !out) return fail(ISOMIN_ERR_CONFIG, "null argument");
  *out = nullptr;
  return guarded([&] {
    isomin::RunConfig cfg;
    cfg.set("surface", name);
    std::optional<double> param;
    if (*cfg.surface == isomin::Surface::cartan) param = t;
    const isomin::LevelSpec spec = isomin::surface_level(*cfg.surface, param);
    *out = new isomin_surface{spec};
  });
}

void isomin_surface_destroy(isomin_surface* s) { delete s; }

double isomin_surface_level(const isomin_surface* s) { return s ? s->spec.level : 0.0; }

isomin_status isomin_surface_project(const isomin_surface* s, const double x0[6], double tol, int max_iter,
                                     double p_out[6]) {
  if (!s || !x0 || !p_out) return fail(ISOMIN_ERR_CONFIG, "null argument");
  return guarded([&] {
    const auto p = isomin::project_to_level(to_vec(x0), s->spec, tol, max_iter);
    for (int i = 0; i < 6; ++i) p_out[i] = p[i];
  });
}

isomin_status isomin_surface_invariants(const isomin_surface* s, const double p[6], double cluster_tol,
                                        isomin_invariants* out) {
  if (!s || !p || !out) return fail(ISOMIN_ERR_CONFIG, "null argument");
  return guarded([&] {
    const auto point = isomin::SpherePoint::from_unit(to_vec(p));
    const auto r = isomin::curvature_report(s->spec, point, cluster_tol);
    isomin_invariants inv{};
    for (int i = 0; i < 4; ++i) inv.lambdas[i] = r.lambdas[i];
    inv.f1 = r.f1;
    inv.f2 = r.f2;
    inv.f3 = r.f3;
    inv.f4 = r.f4;
    inv.S = r.S;
    inv.K = r.K;
    inv.R = r.R;
    inv.g = r.g;
    for (int k = 0; k < r.g; ++k) inv.multiplicities[k] = r.multiplicities[k];
    inv.has_theta0 = r.theta0 ? 1 : 0;
    if (r.theta0) {
      inv.theta0 = r.theta0->theta0;
      inv.theta0_residual = r.theta0->residual;
    }
    *out = inv;
  });
}

isomin_status isomin_recover_curvatures(double p1, double p2, double p3, double e4, double roots_out[4]) {
  if (!roots_out) return fail(ISOMIN_ERR_CONFIG, "null argument");
  return guarded([&] {
    const auto r = isomin::recover_curvatures(p1, p2, p3, e4);
    for (int i = 0; i < 4; ++i) roots_out[i] = r.roots[i];
  });
}

}  // extern "C"
