#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <optional>
#include <string>
#include <vector>

#include "isomin/field.hpp"

namespace isomin {

/// 50 significant decimal digits.
using HighPrec = boost::multiprecision::cpp_dec_float_50;

enum class ModelName { equator, clifford, cartan };

/// An isoparametric minimal hypersurface of S^5 with closed-form invariants.
/// Distinct curvatures are listed in descending order, each with its
/// multiplicity, so curvatures[k] = cot(k pi / g + theta0).
struct IsoModel {
  ModelName name = ModelName::equator;
  int r = 0, s = 0;  // Clifford factor dimensions, zero otherwise
  int g = 1;
  std::vector<int> multiplicities;
  std::vector<HighPrec> curvatures;
  std::vector<std::string> closed_forms;  // human-readable form of each curvature
  HighPrec s_expected;
  std::optional<HighPrec> theta0;
  std::optional<ScalarFieldSpec> field;
  std::optional<double> level;

  /// "equator", "clifford(1,3)", "clifford(2,2)", "cartan"
  std::string label() const;
  /// Curvatures repeated by multiplicity, ascending, as doubles.
  std::vector<double> curvature_list() const;
};

/// Totally geodesic great S^3 = {x6 = 0}.
IsoModel equator_model();

/// S^r(sqrt(r/4)) x S^s(sqrt(s/4)), r + s = 4, 1 <= r <= s. Carries the
/// field x1^2 + ... + x_{r+1}^2 at level r/4; curvatures are taken with
/// respect to its gradient.
IsoModel clifford_model(int r, int s);

/// Cartan's minimal hypersurface M(pi/8) = {F = 1/2}.
IsoModel cartan_model();

/// equator, clifford(1,3), clifford(2,2), cartan.
std::vector<IsoModel> all_models();

/// Level cos^2(2t) of the Cartan family; requires 0 < t < pi/4.
double cartan_level(double t);

struct ModelCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ModelCheckReport {
  std::vector<ModelCheck> checks;
  HighPrec scalar_curvature;  // R = 12 - S for a minimal model

  bool all_passed() const;
  const ModelCheck* find(const std::string& name) const;
};

/// Verifies every IsoModel invariant at 50 digits (absolute tolerance 1e-40):
/// multiplicity_sum, minimality, s_sum, s_gauss ((g-1)*4), periodic_multiplicities,
/// cot_form (g in {2, 4}), scalar_curvature (R >= 0).
ModelCheckReport model_check(const IsoModel& m);

}  // namespace isomin
