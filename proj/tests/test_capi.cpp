#include <cmath>
#include <cstring>
#include <numbers>
#include <string>

#include "doctest.h"
#include "isomin/isomin.h"

namespace {

struct Config {
  isomin_config* cfg = nullptr;
  Config() { REQUIRE(isomin_config_create(&cfg) == ISOMIN_OK); }
  ~Config() { isomin_config_destroy(cfg); }
  isomin_status set(const char* k, const char* v) { return isomin_config_set(cfg, k, v); }
};

}  // namespace

TEST_CASE("version string") { CHECK(std::strlen(isomin_version()) > 0); }

TEST_CASE("configuration errors") {
  Config c;
  CHECK(c.set("surface", "torus") == ISOMIN_ERR_CONFIG);
  CHECK(std::string(isomin_last_error()).find("torus") != std::string::npos);
  CHECK(c.set("samples", "-4") == ISOMIN_ERR_CONFIG);
  CHECK(c.set("bogus", "1") == ISOMIN_ERR_CONFIG);
  CHECK(c.set(nullptr, "1") == ISOMIN_ERR_CONFIG);
  CHECK(isomin_config_set(nullptr, "seed", "1") == ISOMIN_ERR_CONFIG);

  CHECK(c.set("command", "analyze") == ISOMIN_OK);
  CHECK(c.set("surface", "cartan") == ISOMIN_OK);
  isomin_report* r = nullptr;
  CHECK(isomin_run(c.cfg, &r) == ISOMIN_ERR_CONFIG);
  CHECK(r == nullptr);
  CHECK(isomin_run(c.cfg, nullptr) == ISOMIN_ERR_CONFIG);
}

TEST_CASE("catalog run") {
  Config c;
  REQUIRE(c.set("command", "catalog") == ISOMIN_OK);
  REQUIRE(c.set("format", "csv") == ISOMIN_OK);
  isomin_report* r = nullptr;
  REQUIRE(isomin_run(c.cfg, &r) == ISOMIN_OK);
  CHECK(isomin_report_exit_code(r) == 0);
  CHECK(isomin_report_format(r) == ISOMIN_FORMAT_CSV);
  const std::string csv = isomin_report_text(r, ISOMIN_FORMAT_CSV);
  const std::string json = isomin_report_text(r, ISOMIN_FORMAT_JSON);
  CHECK(csv.rfind("name,", 0) == 0);
  CHECK(json.find("\"schema_version\": \"1\"") != std::string::npos);
  isomin_report_destroy(r);
}

TEST_CASE("analyze run") {
  Config c;
  c.set("command", "analyze");
  c.set("surface", "cartan");
  c.set("t", "pi/8");
  c.set("samples", "20");
  isomin_report* r = nullptr;
  REQUIRE(isomin_run(c.cfg, &r) == ISOMIN_OK);
  CHECK(isomin_report_exit_code(r) == 0);
  CHECK(isomin_report_format(r) == ISOMIN_FORMAT_JSON);
  CHECK(std::string(isomin_report_text(r, ISOMIN_FORMAT_JSON)).find("\"cartan\"") != std::string::npos);
  isomin_report_destroy(r);
}

TEST_CASE("surface handles") {
  isomin_surface* s = nullptr;
  CHECK(isomin_surface_create("cartan", 1.0, &s) == ISOMIN_ERR_CONFIG);
  CHECK(isomin_surface_create("nope", 0.0, &s) == ISOMIN_ERR_CONFIG);
  REQUIRE(isomin_surface_create("cartan", std::numbers::pi / 8, &s) == ISOMIN_OK);
  CHECK(std::abs(isomin_surface_level(s) - 0.5) <= 1e-15);

  const double x0[6] = {0.3, -0.2, 0.5, 0.1, 0.7, -0.4};
  double p[6];
  REQUIRE(isomin_surface_project(s, x0, 1e-12, 100, p) == ISOMIN_OK);
  double n2 = 0;
  for (double v : p) n2 += v * v;
  CHECK(std::abs(std::sqrt(n2) - 1) <= 1e-12);

  isomin_invariants inv;
  REQUIRE(isomin_surface_invariants(s, p, 1e-4, &inv) == ISOMIN_OK);
  CHECK(inv.g == 4);
  CHECK(std::abs(inv.S - 12) <= 1e-6);
  CHECK(std::abs(inv.K - 1) <= 1e-6);
  CHECK(std::abs(inv.f1) <= 1e-8);
  CHECK(inv.has_theta0 == 1);
  CHECK(std::abs(inv.theta0 - std::numbers::pi / 8) <= 1e-6);
  for (int k = 0; k < 4; ++k) CHECK(inv.multiplicities[k] == 1);

  const double off[6] = {1, 0, 0, 0, 0, 0};
  CHECK(isomin_surface_invariants(s, off, 1e-4, &inv) == ISOMIN_ERR_CONFIG);
  isomin_surface_destroy(s);

  REQUIRE(isomin_surface_create("equator", 0.0, &s) == ISOMIN_OK);
  const double pole[6] = {0, 0, 0, 0, 0, 2};
  CHECK(isomin_surface_project(s, pole, 1e-12, 100, p) == ISOMIN_ERR_NUMERIC);
  isomin_surface_destroy(s);
}

TEST_CASE("running out of projection iterations is a numeric error") {
  isomin_surface* s = nullptr;
  REQUIRE(isomin_surface_create("cartan", 0.3, &s) == ISOMIN_OK);
  const double x0[6] = {0.9, 0.1, 0, 0, 0, 0.05};
  double p[6];
  CHECK(isomin_surface_project(s, x0, 1e-12, 1, p) == ISOMIN_ERR_NUMERIC);
  isomin_surface_destroy(s);
}

TEST_CASE("curvature recovery") {
  double roots[4];
  REQUIRE(isomin_recover_curvatures(0, 12, 0, 1, roots) == ISOMIN_OK);
  CHECK(std::abs(roots[3] - (1 + std::sqrt(2.0))) <= 1e-9);
  CHECK(isomin_recover_curvatures(0, -4, 0, 1, roots) == ISOMIN_ERR_NUMERIC);
  CHECK(isomin_recover_curvatures(0, 12, 0, NAN, roots) == ISOMIN_ERR_CONFIG);
}

TEST_CASE("null handles are tolerated by destroy calls") {
  isomin_config_destroy(nullptr);
  isomin_report_destroy(nullptr);
  isomin_surface_destroy(nullptr);
}
