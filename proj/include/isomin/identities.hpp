#pragma once

#include <array>
#include <vector>

#include "isomin/rational.hpp"

namespace isomin {

using Rational4 = std::array<Rational, 4>;
/// diag[i][l] = h_iil, the diagonal components of grad h in an admissible frame.
using DiagTable = std::array<Rational4, 4>;

/// Four distinct principal curvatures lambda_1 < lambda_2 < lambda_3 < lambda_4.
class Quadruple {
 public:
  /// Throws InvalidArgument unless values are strictly increasing.
  explicit Quadruple(Rational4 values);

  const Rational& operator[](int i) const { return lam_[i]; }
  const Rational4& values() const { return lam_; }

 private:
  Rational4 lam_;
};

/// Exact parameterisation of grad h at one point: the curvatures, the frame
/// components K_l of dK, and the four fully mixed components
/// mixed = (h_123, h_124, h_134, h_234). The diagonal block h_iil follows
/// from K via diag_from_K; by total symmetry these determine every h_ijk.
class DerivativeTable {
 public:
  DerivativeTable(Quadruple lam, Rational4 K, Rational4 mixed);

  const Quadruple& lam() const { return lam_; }
  const Rational4& K() const { return K_; }
  const Rational4& mixed() const { return mixed_; }
  const DiagTable& diag() const { return diag_; }

  /// h_abc for 0-based a, b, c, symmetric in all three indices.
  const Rational& h(int a, int b, int c) const;

 private:
  Quadruple lam_;
  Rational4 K_;
  Rational4 mixed_;
  DiagTable diag_;
};

/// coeff * sqrt(radicand), radicand >= 0.
struct Surd {
  Rational coeff;
  Rational radicand;

  Rational square() const { return coeff * coeff * radicand; }
  double value() const;
};

struct TwoCurvatureBranch {
  Surd lambda;  // multiplicity k
  Surd mu;      // multiplicity 4 - k
};

/// Both solutions of k lambda + (4-k) mu = 0, k lambda^2 + (4-k) mu^2 = S.
/// Throws InvalidArgument for k outside {1,2,3} or S < 0, Degenerate for S = 0.
std::array<TwoCurvatureBranch, 2> g2_solve(int k, const Rational& S);

/// Exact check of both equations for one branch.
bool g2_branch_satisfies(int k, const Rational& S, const TwoCurvatureBranch& b);

struct ThreeCurvatureKernel {
  int kernel_dim = 0;
  Rational determinant;       // by exact elimination
  Rational vandermonde_form;  // p q r (mu - lambda)(sigma - lambda)(sigma - mu)
};

/// Kernel of [[p,q,r],[p l,q m,r s],[p l^2,q m^2,r s^2]] acting on
/// (d lambda, d mu, d sigma). Throws InvalidArgument unless p, q, r >= 1 sum
/// to 4, Degenerate when two curvatures coincide.
ThreeCurvatureKernel g3_kernel(int p, int q, int r, const std::array<Rational, 3>& curvatures);

/// h_iil = K_l / prod_{j != i} (lambda_j - lambda_i). Postcondition (checked):
/// sum_i h_iil = sum_i lambda_i h_iil = sum_i lambda_i^2 h_iil = 0 per column.
DiagTable diag_from_K(const Quadruple& lam, const Rational4& K);

/// Column l (0-based) of the diagonal table obtained by exact Gaussian
/// elimination on the three power-sum constraints plus
/// sum_i h_iil prod_{j != i} lambda_j = K_l.
Rational4 diag_from_system(const Quadruple& lam, const Rational& K_l, int l);

/// I_l = sum over i < j, both != l, of h_iil h_jjl / ((lambda_l - lambda_i)(lambda_l - lambda_j)).
Rational4 i_from_definition(const Quadruple& lam, const DiagTable& diag);

/// The four closed forms I_l = -(K_l^2 / D^2) * bracket_l,
/// D = prod_{i<j} (lambda_j - lambda_i).
Rational4 i_closed_form(const Quadruple& lam, const Rational4& K);

/// (I_l <= 0) for each l, evaluated exactly from the closed forms.
std::array<bool, 4> i_nonpositive(const Quadruple& lam, const Rational4& K);

/// Scalar curvature sum_{i != j} (1 + lambda_i lambda_j) = 12 + f1^2 - S.
Rational gauss_R(const Quadruple& lam);

/// Coefficient of vol in d psi, assembled term by term: for each of the six
/// 3-forms w_i ^ w_j ^ w_kl of psi, d(w_i) ^ w_j ^ w_kl - w_i ^ d(w_j) ^ w_kl +
/// w_i ^ w_j ^ d(w_kl), with R_klkl = 1 + lambda_k lambda_l.
Rational dpsi_coefficient(const DerivativeTable& t);

/// Index table (i, j; k, l), 0-based, of the six terms of psi. Each is an even
/// permutation of (0,1,2,3), so w_i ^ w_j ^ w_k ^ w_l = vol.
extern const std::array<std::array<int, 4>, 6> kPsiTerms;

struct RecoveredCurvatures {
  std::array<double, 4> roots{};   // ascending, repeated roots listed repeatedly
  std::vector<int> multiplicities;  // per distinct root, ascending
};

/// Roots of x^4 - e1 x^3 + e2 x^2 - e3 x + e4 with e1..e3 from the power sums
/// p1..p3 by Newton's identities. Roots closer than 1e-4 * max(1, |root|)
/// are merged into one repeated root (their centroid, polished on the
/// matching derivative). Throws ComplexRoots when a root has imaginary part
/// above 1e-10 * max(1, |root|).
RecoveredCurvatures recover_curvatures(const Rational& p1, const Rational& p2, const Rational& p3,
                                       const Rational& e4);
RecoveredCurvatures recover_curvatures(double p1, double p2, double p3, double e4);

/// e1, e2, e3 from power sums (exact).
std::array<Rational, 3> elementary_from_power_sums(const Rational& p1, const Rational& p2,
                                                   const Rational& p3);

}  // namespace isomin
