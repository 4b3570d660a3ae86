#pragma once

#include <array>
#include <string>
#include <vector>

#include "isomin/jet.hpp"
#include "isomin/rational.hpp"

namespace isomin {

using Vec6 = std::array<double, 6>;

struct Monomial {
  double coeff = 0.0;
  std::array<int, 6> exponents{};
};

/// Sum of monomials in x1..x6 with like terms combined, kept sorted by
/// exponent vector. Coefficients must be finite.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Monomial> terms);

  static Polynomial coordinate(int axis);

  const std::vector<Monomial>& terms() const { return terms_; }
  int degree() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double c, const Polynomial& p);

 private:
  std::vector<Monomial> terms_;
};

/// An ambient scalar field on R^6 that can be differentiated twice.
class ScalarFieldSpec {
 public:
  enum class Kind { coordinate, cartan_quartic, polynomial };

  /// x_{axis+1}; axis in [0, 6).
  static ScalarFieldSpec coordinate(int axis);
  /// F = (sum_{i<=3} x_i^2 - x_{i+3}^2)^2 + 4 (sum_{i<=3} x_i x_{i+3})^2.
  static ScalarFieldSpec cartan_quartic();
  static ScalarFieldSpec polynomial(Polynomial p);

  Kind kind() const { return kind_; }
  int axis() const { return axis_; }
  const Polynomial& poly() const { return poly_; }
  std::string describe() const;

  /// The same field written as an explicit polynomial.
  Polynomial to_polynomial() const;

  /// Value, gradient and Hessian at x. Throws InvalidArgument for
  /// non-finite components.
  Jet2<double> eval2(const Vec6& x) const;
  /// Exact evaluation.
  Jet2<Rational> eval2(const std::array<Rational, 6>& x) const;

  double value(const Vec6& x) const { return eval2(x).value(); }

 private:
  ScalarFieldSpec(Kind kind, int axis, Polynomial poly)
      : kind_(kind), axis_(axis), poly_(std::move(poly)) {}

  Kind kind_;
  int axis_ = 0;
  Polynomial poly_;
};

}  // namespace isomin
