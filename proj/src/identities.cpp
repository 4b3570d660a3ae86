#include "isomin/identities.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>

#include "isomin/error.hpp"

namespace isomin {
namespace {

int sign(const Rational& q) { return sgn(q); }

bool surd_pair_sums_to_zero(const Surd& x, const Surd& y) {
  const Rational x2 = x.square(), y2 = y.square();
  if (x2 != y2) return false;
  if (x2 == 0) return true;
  return sign(x.coeff) == -sign(y.coeff);
}

template <std::size_t N>
using Matrix = std::array<std::array<Rational, N>, N>;

/// Exact row reduction. Returns the rank; when rhs is given and the matrix is
/// nonsingular, rhs is overwritten with the solution.
template <std::size_t N>
int eliminate(Matrix<N> a, std::array<Rational, N>* rhs, Rational* det) {
  int rank = 0;
  Rational d = 1;
  std::array<Rational, N> b{};
  if (rhs) b = *rhs;
  std::array<int, N> pivot_col{};
  for (std::size_t col = 0; col < N && rank < static_cast<int>(N); ++col) {
    std::size_t piv = rank;
    while (piv < N && a[piv][col] == 0) ++piv;
    if (piv == N) {
      d = 0;
      continue;
    }
    if (piv != static_cast<std::size_t>(rank)) {
      std::swap(a[piv], a[rank]);
      std::swap(b[piv], b[rank]);
      d = -d;
    }
    d *= a[rank][col];
    for (std::size_t row = 0; row < N; ++row) {
      if (row == static_cast<std::size_t>(rank) || a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[rank][col];
      for (std::size_t c = col; c < N; ++c) a[row][c] -= f * a[rank][c];
      b[row] -= f * b[rank];
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  if (rank < static_cast<int>(N)) d = 0;
  if (det) *det = d;
  if (rhs && rank == static_cast<int>(N)) {
    for (std::size_t row = 0; row < N; ++row) (*rhs)[pivot_col[row]] = b[row] / a[row][pivot_col[row]];
  }
  return rank;
}

Rational prod_other_differences(const Quadruple& lam, int i) {
  Rational p = 1;
  for (int j = 0; j < 4; ++j)
    if (j != i) p *= lam[j] - lam[i];
  return p;
}

// Rational -> long double with a correction term for the bits a double loses.
long double to_long_double(const Rational& q) {
  const double hi = q.get_d();
  const Rational rest = q - Rational(hi);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

using Coeffs = std::vector<long double>;  // ascending powers

long double horner(const Coeffs& c, long double x) {
  long double v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

Coeffs derivative(const Coeffs& c) {
  Coeffs d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<long double>(k) * c[k]);
  return d;
}

// Newton on f starting at x, stopping once |f| stops decreasing.
long double polish(const Coeffs& f, long double x) {
  const Coeffs df = derivative(f);
  long double fx = horner(f, x);
  for (int it = 0; it < 30 && fx != 0; ++it) {
    const long double d = horner(df, x);
    if (d == 0) break;
    const long double next = x - fx / d;
    const long double fn = horner(f, next);
    if (!(std::fabs(fn) < std::fabs(fx))) break;
    x = next;
    fx = fn;
  }
  return x;
}

}  // namespace

Quadruple::Quadruple(Rational4 values) : lam_(std::move(values)) {
  for (int i = 0; i < 3; ++i)
    if (!(lam_[i] < lam_[i + 1])) throw InvalidArgument("curvatures must be strictly increasing");
}

DerivativeTable::DerivativeTable(Quadruple lam, Rational4 K, Rational4 mixed)
    : lam_(std::move(lam)), K_(std::move(K)), mixed_(std::move(mixed)), diag_(diag_from_K(lam_, K_)) {}

const Rational& DerivativeTable::h(int a, int b, int c) const {
  if (a != b && b != c && a != c) {
    const int missing = 6 - a - b - c;  // 0+1+2+3 = 6
    return mixed_[3 - missing];
  }
  // At least two indices agree: h_iil with i the repeated index, l the other.
  if (a == b) return diag_[a][c];
  if (a == c) return diag_[a][b];
  return diag_[b][a];
}

double Surd::value() const { return coeff.get_d() * std::sqrt(radicand.get_d()); }

std::array<TwoCurvatureBranch, 2> g2_solve(int k, const Rational& S) {
  if (k < 1 || k > 3) throw InvalidArgument("multiplicity k must be 1, 2 or 3");
  if (S < 0) throw InvalidArgument("S must be non-negative");
  if (S == 0) throw Degenerate("S = 0 forces lambda = mu = 0");
  // lambda = sqrt(k(4-k)S) / (2k), mu = -sqrt(kS) / (2 sqrt(4-k))
  const Surd lambda{Rational(1, 2 * k), Rational(k * (4 - k)) * S};
  const Surd mu{Rational(-1, 2), Rational(k) * S / (4 - k)};
  const Surd neg_lambda{-lambda.coeff, lambda.radicand};
  const Surd neg_mu{-mu.coeff, mu.radicand};
  return {TwoCurvatureBranch{lambda, mu}, TwoCurvatureBranch{neg_lambda, neg_mu}};
}

bool g2_branch_satisfies(int k, const Rational& S, const TwoCurvatureBranch& b) {
  const Surd kl{k * b.lambda.coeff, b.lambda.radicand};
  const Surd km{(4 - k) * b.mu.coeff, b.mu.radicand};
  const bool linear = surd_pair_sums_to_zero(kl, km);
  const bool quadratic = k * b.lambda.square() + (4 - k) * b.mu.square() == S;
  return linear && quadratic;
}

ThreeCurvatureKernel g3_kernel(int p, int q, int r, const std::array<Rational, 3>& c) {
  if (p < 1 || q < 1 || r < 1 || p + q + r != 4)
    throw InvalidArgument("multiplicities must be positive and sum to 4");
  if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
    throw Degenerate("three-curvature system needs pairwise distinct curvatures");
  const std::array<Rational, 3> m{Rational(p), Rational(q), Rational(r)};
  Matrix<3> a;
  for (int j = 0; j < 3; ++j) {
    a[0][j] = m[j];
    a[1][j] = m[j] * c[j];
    a[2][j] = m[j] * c[j] * c[j];
  }
  ThreeCurvatureKernel out;
  out.kernel_dim = 3 - eliminate<3>(a, nullptr, &out.determinant);
  out.vandermonde_form = Rational(p * q * r) * (c[1] - c[0]) * (c[2] - c[0]) * (c[2] - c[1]);
  return out;
}

DiagTable diag_from_K(const Quadruple& lam, const Rational4& K) {
  DiagTable d;
  for (int i = 0; i < 4; ++i) {
    const Rational denom = prod_other_differences(lam, i);
    for (int l = 0; l < 4; ++l) d[i][l] = K[l] / denom;
  }
  for (int l = 0; l < 4; ++l) {
    Rational s0 = 0, s1 = 0, s2 = 0;
    for (int i = 0; i < 4; ++i) {
      s0 += d[i][l];
      s1 += lam[i] * d[i][l];
      s2 += lam[i] * lam[i] * d[i][l];
    }
    if (s0 != 0 || s1 != 0 || s2 != 0)
      throw NumericalError("diag_from_K postcondition violated (power-sum constraints)");
  }
  return d;
}

Rational4 diag_from_system(const Quadruple& lam, const Rational& K_l, int l) {
  if (l < 0 || l > 3) throw InvalidArgument("column index l must be in [0, 4)");
  Matrix<4> a;
  for (int i = 0; i < 4; ++i) {
    a[0][i] = 1;
    a[1][i] = lam[i];
    a[2][i] = lam[i] * lam[i];
    Rational others = 1;
    for (int j = 0; j < 4; ++j)
      if (j != i) others *= lam[j];
    a[3][i] = others;
  }
  Rational4 rhs{0, 0, 0, K_l};
  if (eliminate<4>(a, &rhs, nullptr) != 4)
    throw NumericalError("diagonal system singular despite distinct curvatures");
  return rhs;
}

Rational4 i_from_definition(const Quadruple& lam, const DiagTable& diag) {
  Rational4 out;
  for (int l = 0; l < 4; ++l) {
    Rational s = 0;
    for (int i = 0; i < 4; ++i) {
      if (i == l) continue;
      for (int j = i + 1; j < 4; ++j) {
        if (j == l) continue;
        s += diag[i][l] * diag[j][l] / ((lam[l] - lam[i]) * (lam[l] - lam[j]));
      }
    }
    out[l] = s;
  }
  return out;
}

Rational4 i_closed_form(const Quadruple& lam, const Rational4& K) {
  const Rational &l1 = lam[0], &l2 = lam[1], &l3 = lam[2], &l4 = lam[3];
  Rational D = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) D *= lam[j] - lam[i];
  const Rational D2 = D * D;
  auto sq = [](const Rational& x) { return Rational(x * x); };

  const Rational b1 = (l4 - l3) * (l4 - l2) * sq(l4 - l1) + (l3 - l4) * (l3 - l2) * sq(l3 - l1) +
                      (l2 - l4) * (l2 - l3) * sq(l2 - l1);
  const Rational b2 = (l4 - l3) * sq(l4 - l2) * (l4 - l1) + (l3 - l4) * sq(l3 - l2) * (l3 - l1) +
                      (l1 - l4) * (l1 - l3) * sq(l1 - l2);
  const Rational b3 = sq(l4 - l3) * (l4 - l2) * (l4 - l1) + (l2 - l4) * sq(l2 - l3) * (l2 - l1) +
                      (l1 - l4) * sq(l1 - l3) * (l1 - l2);
  const Rational b4 = sq(l3 - l4) * (l3 - l2) * (l3 - l1) + sq(l2 - l4) * (l2 - l3) * (l2 - l1) +
                      sq(l1 - l4) * (l1 - l3) * (l1 - l2);
  const std::array<const Rational*, 4> brackets{&b1, &b2, &b3, &b4};
  Rational4 out;
  for (int l = 0; l < 4; ++l) out[l] = -(K[l] * K[l] / D2) * *brackets[l];
  return out;
}

std::array<bool, 4> i_nonpositive(const Quadruple& lam, const Rational4& K) {
  const Rational4 I = i_closed_form(lam, K);
  return {I[0] <= 0, I[1] <= 0, I[2] <= 0, I[3] <= 0};
}

Rational gauss_R(const Quadruple& lam) {
  Rational R = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) R += 1 + lam[i] * lam[j];
  return R;
}

const std::array<std::array<int, 4>, 6> kPsiTerms = {{
    {0, 1, 2, 3},
    {1, 2, 0, 3},
    {2, 0, 1, 3},
    {0, 3, 1, 2},
    {1, 3, 2, 0},
    {2, 3, 0, 1},
}};

Rational dpsi_coefficient(const DerivativeTable& t) {
  const Quadruple& lam = t.lam();
  auto gap = [&](int a, int b) { return Rational(lam[a] - lam[b]); };

  // Coefficient of vol in d(w_a) ^ w_b ^ w_kl is -frame_piece(a, k, l); in
  // w_a ^ d(w_b) ^ w_kl it is +frame_piece(b, k, l).
  auto frame_piece = [&](int a, int k, int l) {
    return Rational(t.h(a, a, k) * t.h(l, l, k) / (gap(k, a) * gap(k, l)) +
                    t.h(a, a, l) * t.h(k, k, l) / (gap(l, a) * gap(l, k)) +
                    t.h(a, k, l) * t.h(a, k, l) / (gap(k, a) * gap(l, a)));
  };
  // Contribution of w_ka ^ w_al to d(w_kl), paired with w_i ^ w_j.
  auto connection_piece = [&](int a, int k, int l) {
    return Rational(t.h(k, k, a) * t.h(l, l, a) / (gap(k, a) * gap(l, a)) -
                    t.h(a, k, l) * t.h(a, k, l) / (gap(k, a) * gap(l, a)));
  };

  Rational total = 0;
  for (const auto& term : kPsiTerms) {
    const int i = term[0], j = term[1], k = term[2], l = term[3];
    const Rational d_wi = -frame_piece(i, k, l);
    const Rational d_wj = frame_piece(j, k, l);
    const Rational d_wkl = connection_piece(i, k, l) + connection_piece(j, k, l) + 1 + lam[k] * lam[l];
    total += d_wi - d_wj + d_wkl;
  }
  return total;
}

std::array<Rational, 3> elementary_from_power_sums(const Rational& p1, const Rational& p2,
                                                   const Rational& p3) {
  const Rational e1 = p1;
  const Rational e2 = (p1 * p1 - p2) / 2;
  const Rational e3 = (p1 * p1 * p1 - 3 * p1 * p2 + 2 * p3) / 6;
  return {e1, e2, e3};
}

RecoveredCurvatures recover_curvatures(const Rational& p1, const Rational& p2, const Rational& p3,
                                       const Rational& e4) {
  const auto [e1, e2, e3] = elementary_from_power_sums(p1, p2, p3);
  // x^4 - e1 x^3 + e2 x^2 - e3 x + e4, ascending powers
  const Coeffs poly{to_long_double(e4), -to_long_double(e3), to_long_double(e2), -to_long_double(e1), 1.0L};

  using Mat = Eigen::Matrix<long double, 4, 4>;
  Mat companion = Mat::Zero();
  for (int j = 0; j < 4; ++j) companion(0, j) = -poly[3 - j];
  for (int i = 1; i < 4; ++i) companion(i, i - 1) = 1.0L;
  Eigen::EigenSolver<Mat> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericalError("companion eigenvalue iteration failed");
  std::array<std::complex<long double>, 4> z;
  long double scale = 1.0L;
  for (int i = 0; i < 4; ++i) {
    z[i] = solver.eigenvalues()[i];
    scale = std::max(scale, std::abs(z[i]));
  }

  // Union-find over roots closer than the merge radius.
  const long double radius = 1e-4L * scale;
  std::array<int, 4> parent{0, 1, 2, 3};
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(z[i] - z[j]) <= radius) parent[find(j)] = find(i);

  struct Cluster {
    long double re;
    int size;
  };
  std::vector<Cluster> clusters;
  for (int root = 0; root < 4; ++root) {
    if (find(root) != root) continue;
    std::complex<long double> sum = 0;
    int size = 0;
    for (int i = 0; i < 4; ++i)
      if (find(i) == root) {
        sum += z[i];
        ++size;
      }
    const std::complex<long double> centroid = sum / static_cast<long double>(size);
    if (std::fabs(centroid.imag()) > 1e-10L * std::max(1.0L, std::abs(centroid)))
      throw ComplexRoots("invariants admit no real curvature quadruple (root imaginary part " +
                         std::to_string(static_cast<double>(centroid.imag())) + ")");
    // A root of multiplicity m is a simple root of the (m-1)-th derivative.
    Coeffs f = poly;
    for (int d = 1; d < size; ++d) f = derivative(f);
    clusters.push_back({polish(f, centroid.real()), size});
  }
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) { return a.re < b.re; });

  RecoveredCurvatures out;
  int n = 0;
  for (const auto& c : clusters) {
    out.multiplicities.push_back(c.size);
    for (int k = 0; k < c.size; ++k) out.roots[n++] = static_cast<double>(c.re);
  }
  return out;
}

RecoveredCurvatures recover_curvatures(double p1, double p2, double p3, double e4) {
  return recover_curvatures(exact_from_double(p1), exact_from_double(p2), exact_from_double(p3),
                            exact_from_double(e4));
}

}  // namespace isomin
