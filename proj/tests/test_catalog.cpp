#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "isomin/catalog.hpp"
#include "isomin/error.hpp"
#include "isomin/shape.hpp"

using namespace isomin;

namespace {

const double kPi = std::numbers::pi;

double hp(const HighPrec& x) { return x.convert_to<double>(); }

double power_sum(const IsoModel& m, int k) {
  HighPrec s = 0;
  for (int i = 0; i < m.g; ++i) s += m.multiplicities[i] * pow(m.curvatures[i], k);
  return hp(s);
}

}  // namespace

TEST_CASE("equator model") {
  const IsoModel m = equator_model();
  CHECK(m.g == 1);
  CHECK(m.multiplicities == std::vector<int>{4});
  CHECK(m.curvature_list() == std::vector<double>{0, 0, 0, 0});
  CHECK(hp(m.s_expected) == 0.0);
  CHECK(power_sum(m, 1) == 0.0);
  REQUIRE(m.field.has_value());
  CHECK(m.field->kind() == ScalarFieldSpec::Kind::coordinate);
  CHECK(m.field->axis() == 5);
  CHECK(*m.level == 0.0);
}

TEST_CASE("Clifford M_{1,3}") {
  const IsoModel m = clifford_model(1, 3);
  const double r3 = std::sqrt(3.0);
  const std::vector<double> expect{-1 / r3, -1 / r3, -1 / r3, r3};
  const auto got = m.curvature_list();
  for (int i = 0; i < 4; ++i) CHECK(std::abs(got[i] - expect[i]) <= 1e-15);
  // f3 = 3 sqrt(3) - 3 / (3 sqrt(3)) = 8 sqrt(3) / 3, evaluated in long double.
  const long double f3 = 8.0L * std::sqrt(3.0L) / 3.0L;
  CHECK(std::abs(power_sum(m, 3) - static_cast<double>(f3)) <= 1e-15);
  CHECK(std::abs(power_sum(m, 3) - 4.6188) <= 1e-4);
  CHECK(hp(m.s_expected) == 4.0);
  CHECK(std::abs(power_sum(m, 2) - 4.0) <= 1e-15);
  CHECK(std::abs(power_sum(m, 1)) <= 1e-15);
  CHECK(std::abs(hp(*m.theta0) - kPi / 6) <= 1e-15);
}

TEST_CASE("Clifford M_{2,2}") {
  const IsoModel m = clifford_model(2, 2);
  CHECK(m.curvature_list() == std::vector<double>{-1, -1, 1, 1});
  CHECK(power_sum(m, 3) == 0.0);
  CHECK(hp(m.s_expected) == 4.0);
  double K = 1;
  for (double l : m.curvature_list()) K *= l;
  CHECK(K == 1.0);
}

TEST_CASE("clifford_model preconditions") {
  CHECK_THROWS_AS(clifford_model(1, 2), InvalidArgument);
  CHECK_THROWS_AS(clifford_model(3, 1), InvalidArgument);
  CHECK_THROWS_AS(clifford_model(0, 4), InvalidArgument);
}

TEST_CASE("Cartan model") {
  const IsoModel m = cartan_model();
  CHECK(m.g == 4);
  CHECK(m.multiplicities == std::vector<int>{1, 1, 1, 1});
  CHECK(hp(m.s_expected) == 12.0);
  const double r2 = std::sqrt(2.0);
  const std::vector<double> expect{-1 - r2, 1 - r2, r2 - 1, 1 + r2};
  const auto got = m.curvature_list();
  for (int i = 0; i < 4; ++i) CHECK(std::abs(got[i] - expect[i]) <= 1e-15);
  // ((sqrt2 + 1)(sqrt2 - 1))^2 = 1 and the +- pairing kills odd power sums.
  HighPrec K = 1;
  for (const auto& c : m.curvatures) K *= c;
  CHECK(std::abs(hp(K) - 1.0) <= 1e-40);
  CHECK(std::abs(power_sum(m, 3)) <= 1e-40);
  CHECK(std::abs(hp(*m.theta0) - kPi / 8) <= 1e-16);
  CHECK(m.field->kind() == ScalarFieldSpec::Kind::cartan_quartic);
  CHECK(*m.level == 0.5);
}

TEST_CASE("catalog S values are exactly {0, 4, 12}") {
  std::multiset<double> s;
  for (const auto& m : all_models()) s.insert(hp(m.s_expected));
  CHECK(s == std::multiset<double>{0, 4, 4, 12});
}

TEST_CASE("cartan_level") {
  CHECK(std::abs(cartan_level(kPi / 8) - 0.5) <= 1e-15);
  CHECK(std::abs(cartan_level(kPi / 6) - 0.25) <= 1e-15);
  CHECK(cartan_level(1e-9) > 1 - 1e-15);
  CHECK_THROWS_AS(cartan_level(0.0), InvalidArgument);
  CHECK_THROWS_AS(cartan_level(kPi / 4), InvalidArgument);
  CHECK_THROWS_AS(cartan_level(-0.1), InvalidArgument);
  CHECK_THROWS_AS(cartan_level(NAN), InvalidArgument);
}

TEST_CASE("every catalog model passes model_check") {
  for (const auto& m : all_models()) {
    const auto rep = model_check(m);
    INFO(m.label());
    CHECK(rep.all_passed());
    CHECK(hp(rep.scalar_curvature) == 12.0 - hp(m.s_expected));
    if (m.g == 2 || m.g == 4) CHECK(rep.find("cot_form") != nullptr);
  }
  CHECK(model_check(clifford_model(1, 3)).find("periodic_multiplicities")->passed);
}

TEST_CASE("a tampered model fails the S = (g-1)n check") {
  IsoModel m = clifford_model(2, 2);
  m.s_expected = 5;
  const auto rep = model_check(m);
  CHECK_FALSE(rep.all_passed());
  CHECK_FALSE(rep.find("s_gauss")->passed);
  CHECK_FALSE(rep.find("s_sum")->passed);
  CHECK(rep.find("minimality")->passed);
}

TEST_CASE("other tampering is reported") {
  IsoModel m = cartan_model();
  m.curvatures[0] += HighPrec("1e-30");
  CHECK_FALSE(model_check(m).find("minimality")->passed);
  CHECK_FALSE(model_check(m).find("cot_form")->passed);

  IsoModel w = cartan_model();
  w.multiplicities = {2, 1, 1, 1};
  CHECK_FALSE(model_check(w).find("multiplicity_sum")->passed);
  CHECK_FALSE(model_check(w).find("periodic_multiplicities")->passed);
}

TEST_CASE("property: sampled reports match each model's curvature multiset") {
  gen::Engine e(107);
  for (const auto& m : all_models()) {
    REQUIRE(m.field.has_value());
    const LevelSpec spec{*m.field, *m.level};
    const auto expect = m.curvature_list();
    std::vector<double> flipped;
    for (double l : expect) flipped.push_back(-l);
    std::sort(flipped.begin(), flipped.end());
    int matched = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const SpherePoint p = project_to_level(gen::sphere_point(e), spec);
      const auto r = curvature_report(spec, p);
      double d_up = 0, d_down = 0;
      for (int i = 0; i < 4; ++i) {
        d_up = std::max(d_up, std::abs(r.lambdas[i] - expect[i]));
        d_down = std::max(d_down, std::abs(r.lambdas[i] - flipped[i]));
      }
      matched += std::min(d_up, d_down) <= 1e-6;
      CHECK(std::abs(r.S - 4.0 * (m.g - 1)) <= 1e-6);
    }
    INFO(m.label());
    CHECK(matched == 200);
  }
}
