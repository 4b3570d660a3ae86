#include "isomin/symeig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "isomin/error.hpp"

namespace isomin {

SymMat4 SymMat4::from_rows(const Rows& rows) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (rows[i][j] != rows[j][i]) throw InvalidArgument("SymMat4 rows are not symmetric");
  SymMat4 m;
  m.a_ = rows;
  return m;
}

SymMat4 SymMat4::diagonal(const std::array<double, 4>& d) {
  SymMat4 m;
  for (int i = 0; i < 4; ++i) m.a_[i][i] = d[i];
  return m;
}

double SymMat4::frobenius_norm() const {
  double s = 0.0;
  for (const auto& row : a_)
    for (double v : row) s += v * v;
  return std::sqrt(s);
}

double SymMat4::trace() const { return a_[0][0] + a_[1][1] + a_[2][2] + a_[3][3]; }

double SymMat4::determinant() const {
  // Laplace expansion along the first row of 3x3 minors.
  auto minor3 = [&](int skip) {
    int c[3], n = 0;
    for (int j = 0; j < 4; ++j)
      if (j != skip) c[n++] = j;
    const auto& a = a_;
    return a[1][c[0]] * (a[2][c[1]] * a[3][c[2]] - a[2][c[2]] * a[3][c[1]]) -
           a[1][c[1]] * (a[2][c[0]] * a[3][c[2]] - a[2][c[2]] * a[3][c[0]]) +
           a[1][c[2]] * (a[2][c[0]] * a[3][c[1]] - a[2][c[1]] * a[3][c[0]]);
  };
  double det = 0.0;
  for (int j = 0; j < 4; ++j) det += (j % 2 == 0 ? 1.0 : -1.0) * a_[0][j] * minor3(j);
  return det;
}

SymMat4 SymMat4::negated() const {
  SymMat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.a_[i][j] = -a_[i][j];
  return m;
}

SymEigen sym_eigen(const SymMat4& m) {
  constexpr int kMaxSweeps = 100;
  std::array<std::array<double, 4>, 4> a = m.rows();
  std::array<std::array<double, 4>, 4> v{};  // columns are eigenvectors
  for (int i = 0; i < 4; ++i) v[i][i] = 1.0;

  const double threshold = 1e-14 * m.frobenius_norm();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (std::abs(a[p][q]) <= threshold) continue;
        rotated = true;
        // Rotation angle from the stable tangent formula.
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (int k = 0; k < 4; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        a[p][q] = a[q][p] = 0.0;
        for (int k = 0; k < 4; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
    if (!rotated) break;
  }

  std::array<int, 4> order;
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] < a[y][y]; });

  SymEigen out;
  for (int k = 0; k < 4; ++k) {
    const int c = order[k];
    out.values[k] = a[c][c];
    for (int i = 0; i < 4; ++i) out.vectors[k][i] = v[i][c];
    for (int i = 0; i < 4; ++i) {
      if (std::abs(out.vectors[k][i]) > 1e-12) {
        if (out.vectors[k][i] < 0)
          for (double& x : out.vectors[k]) x = -x;
        break;
      }
    }
  }
  return out;
}

}  // namespace isomin
