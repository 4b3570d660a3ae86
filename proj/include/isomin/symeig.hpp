#pragma once

#include <array>

namespace isomin {

/// Symmetric 4x4 matrix. Writes go through set(), which mirrors the entry,
/// so m(i, j) == m(j, i) holds bit for bit.
class SymMat4 {
 public:
  using Rows = std::array<std::array<double, 4>, 4>;

  SymMat4() { a_ = {}; }

  /// Throws InvalidArgument unless rows is exactly symmetric.
  static SymMat4 from_rows(const Rows& rows);
  static SymMat4 diagonal(const std::array<double, 4>& d);
  static SymMat4 identity() { return diagonal({1, 1, 1, 1}); }

  double operator()(int i, int j) const { return a_[i][j]; }
  void set(int i, int j, double v) {
    a_[i][j] = v;
    a_[j][i] = v;
  }
  const Rows& rows() const { return a_; }

  double frobenius_norm() const;
  double trace() const;
  double determinant() const;
  SymMat4 negated() const;

 private:
  Rows a_;
};

struct SymEigen {
  std::array<double, 4> values;                 // ascending
  std::array<std::array<double, 4>, 4> vectors;  // vectors[k] pairs with values[k]
};

/// Cyclic Jacobi rotations; off-diagonal entries below 1e-14 * |m|_F are
/// treated as zero, at most 100 sweeps. Each eigenvector is signed so its
/// first non-negligible component is positive.
SymEigen sym_eigen(const SymMat4& m);

}  // namespace isomin
