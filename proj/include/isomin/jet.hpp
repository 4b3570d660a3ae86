#pragma once

#include <array>
#include <cstddef>

namespace isomin {

/// Second-order forward-mode jet over R^6: value, gradient and Hessian of a
/// scalar expression. The Hessian is stored as its upper triangle, so it is
/// symmetric by construction. T is double for floating evaluation or Rational
/// for exact evaluation; the product rule below is exact in the latter.
template <class T>
class Jet2 {
 public:
  static constexpr int kDim = 6;
  static constexpr int kHessSize = kDim * (kDim + 1) / 2;

  Jet2() : value_(0) {
    grad_.fill(T(0));
    hess_.fill(T(0));
  }

  static Jet2 constant(const T& c) {
    Jet2 j;
    j.value_ = c;
    return j;
  }

  /// The coordinate function x_axis evaluated at x_axis = x.
  static Jet2 variable(int axis, const T& x) {
    Jet2 j;
    j.value_ = x;
    j.grad_[axis] = T(1);
    return j;
  }

  const T& value() const { return value_; }
  const T& grad(int i) const { return grad_[i]; }
  const std::array<T, kDim>& grad() const { return grad_; }
  const T& hess(int i, int j) const { return hess_[index(i, j)]; }

  Jet2& operator+=(const Jet2& o) {
    value_ += o.value_;
    for (int i = 0; i < kDim; ++i) grad_[i] += o.grad_[i];
    for (int k = 0; k < kHessSize; ++k) hess_[k] += o.hess_[k];
    return *this;
  }

  Jet2& operator-=(const Jet2& o) {
    value_ -= o.value_;
    for (int i = 0; i < kDim; ++i) grad_[i] -= o.grad_[i];
    for (int k = 0; k < kHessSize; ++k) hess_[k] -= o.hess_[k];
    return *this;
  }

  Jet2& operator*=(const T& c) {
    value_ *= c;
    for (auto& g : grad_) g *= c;
    for (auto& h : hess_) h *= c;
    return *this;
  }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(Jet2 a, const T& c) { return a *= c; }
  friend Jet2 operator*(const T& c, Jet2 a) { return a *= c; }
  friend Jet2 operator-(Jet2 a) { return a *= T(-1); }

  // (ab)'' = a''b + a'b'^T + b'a'^T + ab''
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.value_ = a.value_ * b.value_;
    for (int i = 0; i < kDim; ++i) r.grad_[i] = a.grad_[i] * b.value_ + a.value_ * b.grad_[i];
    int k = 0;
    for (int i = 0; i < kDim; ++i) {
      for (int j = i; j < kDim; ++j, ++k) {
        r.hess_[k] = a.hess_[k] * b.value_ + a.value_ * b.hess_[k] + a.grad_[i] * b.grad_[j] +
                     a.grad_[j] * b.grad_[i];
      }
    }
    return r;
  }

 private:
  static constexpr int index(int i, int j) {
    if (i > j) {
      const int t = i;
      i = j;
      j = t;
    }
    return i * kDim - i * (i - 1) / 2 + (j - i);
  }

  T value_;
  std::array<T, kDim> grad_;
  std::array<T, kHessSize> hess_;
};

}  // namespace isomin
