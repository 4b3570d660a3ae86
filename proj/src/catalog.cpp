#include "isomin/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "isomin/error.hpp"

namespace isomin {
namespace {

const HighPrec kTol("1e-40");

HighPrec pi_hp() { return boost::math::constants::pi<HighPrec>(); }

std::string str(const HighPrec& x) { return x.str(20); }

}  // namespace

std::string IsoModel::label() const {
  switch (name) {
    case ModelName::equator:
      return "equator";
    case ModelName::clifford:
      return "clifford(" + std::to_string(r) + "," + std::to_string(s) + ")";
    case ModelName::cartan:
      return "cartan";
  }
  return {};
}

std::vector<double> IsoModel::curvature_list() const {
  std::vector<double> out;
  for (std::size_t k = 0; k < curvatures.size(); ++k)
    for (int i = 0; i < multiplicities[k]; ++i) out.push_back(curvatures[k].convert_to<double>());
  std::sort(out.begin(), out.end());
  return out;
}

IsoModel equator_model() {
  IsoModel m;
  m.name = ModelName::equator;
  m.g = 1;
  m.multiplicities = {4};
  m.curvatures = {HighPrec(0)};
  m.closed_forms = {"0"};
  m.s_expected = 0;
  m.theta0 = pi_hp() / 2;  // cot(pi/2) = 0
  m.field = ScalarFieldSpec::coordinate(5);
  m.level = 0.0;
  return m;
}

IsoModel clifford_model(int r, int s) {
  if (r + s != 4 || r < 1 || r > s)
    throw InvalidArgument("clifford_model needs r + s = 4 and 1 <= r <= s");
  IsoModel m;
  m.name = ModelName::clifford;
  m.r = r;
  m.s = s;
  m.g = 2;
  const HighPrec hr(r), hs(s);
  if (r == s) {
    m.curvatures = {HighPrec(1), HighPrec(-1)};
    m.multiplicities = {r, s};
    m.closed_forms = {"1", "-1"};
  } else {
    m.curvatures = {sqrt(hs / hr), -sqrt(hr / hs)};
    m.multiplicities = {r, s};
    const int d = std::gcd(r, s);
    const std::string ratio = r == d ? std::to_string(s / d) : std::to_string(s / d) + "/" + std::to_string(r / d);
    m.closed_forms = {"sqrt(" + ratio + ")", "-1/sqrt(" + ratio + ")"};
  }
  m.s_expected = 4;
  m.theta0 = atan(sqrt(hr / hs));
  std::vector<Monomial> terms;
  for (int i = 0; i <= r; ++i) {
    Monomial t{1.0, {}};
    t.exponents[i] = 2;
    terms.push_back(t);
  }
  m.field = ScalarFieldSpec::polynomial(Polynomial(std::move(terms)));
  m.level = static_cast<double>(r) / 4.0;
  return m;
}

IsoModel cartan_model() {
  IsoModel m;
  m.name = ModelName::cartan;
  m.g = 4;
  m.multiplicities = {1, 1, 1, 1};
  const HighPrec rt2 = sqrt(HighPrec(2));
  m.curvatures = {rt2 + 1, rt2 - 1, 1 - rt2, -1 - rt2};
  m.closed_forms = {"1+sqrt(2)", "sqrt(2)-1", "-(sqrt(2)-1)", "-(1+sqrt(2))"};
  m.s_expected = 12;
  m.theta0 = pi_hp() / 8;
  m.field = ScalarFieldSpec::cartan_quartic();
  m.level = 0.5;
  return m;
}

std::vector<IsoModel> all_models() {
  return {equator_model(), clifford_model(1, 3), clifford_model(2, 2), cartan_model()};
}

double cartan_level(double t) {
  if (!(t > 0.0 && t < std::numbers::pi / 4))
    throw InvalidArgument("Cartan family parameter t must lie in (0, pi/4)");
  const double c = std::cos(2.0 * t);
  return c * c;
}

bool ModelCheckReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ModelCheck& c) { return c.passed; });
}

const ModelCheck* ModelCheckReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ModelCheckReport model_check(const IsoModel& m) {
  ModelCheckReport rep;
  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const bool shapes_ok = m.g >= 1 && static_cast<int>(m.multiplicities.size()) == m.g &&
                         static_cast<int>(m.curvatures.size()) == m.g;
  add("shape", shapes_ok, "g entries for multiplicities and curvatures");
  if (!shapes_ok) return rep;

  int msum = 0;
  for (int k : m.multiplicities) msum += k;
  add("multiplicity_sum", msum == 4, "sum m_k = " + std::to_string(msum));

  HighPrec f1 = 0, f2 = 0;
  for (int k = 0; k < m.g; ++k) {
    f1 += m.multiplicities[k] * m.curvatures[k];
    f2 += m.multiplicities[k] * m.curvatures[k] * m.curvatures[k];
  }
  add("minimality", abs(f1) <= kTol, "sum m_k lambda_k = " + str(f1));
  add("s_sum", abs(f2 - m.s_expected) <= kTol,
      "sum m_k lambda_k^2 = " + str(f2) + ", S = " + str(m.s_expected));
  const HighPrec gauss = HighPrec((m.g - 1) * 4);
  add("s_gauss", abs(m.s_expected - gauss) <= kTol, "(g-1)n = " + str(gauss));

  bool periodic = true;
  for (int k = 0; k < m.g; ++k)
    periodic = periodic && m.multiplicities[k] == m.multiplicities[(k + 2) % m.g];
  add("periodic_multiplicities", periodic, "m_k = m_{k+2} mod g");

  if (m.g == 2 || m.g == 4) {
    bool ok = m.theta0.has_value();
    std::string detail = "theta0 missing";
    if (ok) {
      const HighPrec pi = pi_hp();
      const HighPrec th = *m.theta0;
      ok = th > 0 && th < pi / m.g;
      HighPrec worst = 0;
      for (int k = 0; k < m.g; ++k) {
        const HighPrec arg = k * pi / m.g + th;
        worst = std::max<HighPrec>(worst, abs(m.curvatures[k] - cos(arg) / sin(arg)));
      }
      ok = ok && worst <= kTol;
      detail = "theta0 = " + str(th) + ", max |lambda_k - cot| = " + str(worst);
    }
    add("cot_form", ok, detail);
  }

  rep.scalar_curvature = 12 - m.s_expected;
  add("scalar_curvature", rep.scalar_curvature >= -kTol, "R = 12 - S = " + str(rep.scalar_curvature));
  return rep;
}

}  // namespace isomin
