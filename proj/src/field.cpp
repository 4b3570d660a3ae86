#include "isomin/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "isomin/error.hpp"

namespace isomin {
namespace {

using Exponents = std::array<int, 6>;

Polynomial combine(const std::map<Exponents, double>& acc) {
  std::vector<Monomial> out;
  out.reserve(acc.size());
  for (const auto& [e, c] : acc)
    if (c != 0.0) out.push_back({c, e});
  return Polynomial(std::move(out));
}

template <class T>
Jet2<T> eval_polynomial(const Polynomial& p, const std::array<T, 6>& x) {
  int max_exp = 0;
  for (const auto& m : p.terms())
    for (int e : m.exponents) max_exp = std::max(max_exp, e);

  // powers[axis][k] = x_axis^k as a jet
  std::array<std::vector<Jet2<T>>, 6> powers;
  for (int a = 0; a < 6; ++a) {
    powers[a].reserve(max_exp + 1);
    powers[a].push_back(Jet2<T>::constant(T(1)));
    const Jet2<T> xa = Jet2<T>::variable(a, x[a]);
    for (int k = 1; k <= max_exp; ++k) powers[a].push_back(powers[a].back() * xa);
  }

  Jet2<T> sum;
  for (const auto& m : p.terms()) {
    Jet2<T> term = Jet2<T>::constant(T(m.coeff));
    for (int a = 0; a < 6; ++a)
      if (m.exponents[a] > 0) term = term * powers[a][m.exponents[a]];
    sum += term;
  }
  return sum;
}

template <class T>
Jet2<T> eval_cartan(const std::array<T, 6>& x) {
  Jet2<T> a, b;
  for (int i = 0; i < 3; ++i) {
    const auto u = Jet2<T>::variable(i, x[i]);
    const auto v = Jet2<T>::variable(i + 3, x[i + 3]);
    a += u * u - v * v;
    b += u * v;
  }
  return a * a + T(4) * (b * b);
}

template <class T>
Jet2<T> eval_field(const ScalarFieldSpec& f, const std::array<T, 6>& x) {
  switch (f.kind()) {
    case ScalarFieldSpec::Kind::coordinate:
      return Jet2<T>::variable(f.axis(), x[f.axis()]);
    case ScalarFieldSpec::Kind::cartan_quartic:
      return eval_cartan(x);
    case ScalarFieldSpec::Kind::polynomial:
      return eval_polynomial(f.poly(), x);
  }
  return {};
}

}  // namespace

Polynomial::Polynomial(std::vector<Monomial> terms) {
  std::map<Exponents, double> acc;
  for (const auto& m : terms) {
    if (!std::isfinite(m.coeff)) throw InvalidArgument("polynomial coefficient is not finite");
    for (int e : m.exponents)
      if (e < 0) throw InvalidArgument("negative exponent in polynomial");
    acc[m.exponents] += m.coeff;
  }
  for (const auto& [e, c] : acc)
    if (c != 0.0) terms_.push_back({c, e});
}

Polynomial Polynomial::coordinate(int axis) {
  if (axis < 0 || axis >= 6) throw InvalidArgument("coordinate axis must be in [0, 6)");
  Monomial m{1.0, {}};
  m.exponents[axis] = 1;
  return Polynomial({m});
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& m : terms_) {
    int s = 0;
    for (int e : m.exponents) s += e;
    d = std::max(d, s);
  }
  return d;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::map<Exponents, double> acc;
  for (const auto& m : a.terms_) acc[m.exponents] += m.coeff;
  for (const auto& m : b.terms_) acc[m.exponents] += m.coeff;
  return combine(acc);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::map<Exponents, double> acc;
  for (const auto& ma : a.terms_) {
    for (const auto& mb : b.terms_) {
      Exponents e;
      for (int i = 0; i < 6; ++i) e[i] = ma.exponents[i] + mb.exponents[i];
      acc[e] += ma.coeff * mb.coeff;
    }
  }
  return combine(acc);
}

Polynomial operator*(double c, const Polynomial& p) {
  if (!std::isfinite(c)) throw InvalidArgument("polynomial scale factor is not finite");
  std::vector<Monomial> out = p.terms_;
  for (auto& m : out) m.coeff *= c;
  return Polynomial(std::move(out));
}

ScalarFieldSpec ScalarFieldSpec::coordinate(int axis) {
  if (axis < 0 || axis >= 6) throw InvalidArgument("coordinate axis must be in [0, 6)");
  return ScalarFieldSpec(Kind::coordinate, axis, {});
}

ScalarFieldSpec ScalarFieldSpec::cartan_quartic() {
  return ScalarFieldSpec(Kind::cartan_quartic, 0, {});
}

ScalarFieldSpec ScalarFieldSpec::polynomial(Polynomial p) {
  return ScalarFieldSpec(Kind::polynomial, 0, std::move(p));
}

std::string ScalarFieldSpec::describe() const {
  switch (kind_) {
    case Kind::coordinate:
      return "x" + std::to_string(axis_ + 1);
    case Kind::cartan_quartic:
      return "cartan_quartic";
    case Kind::polynomial: {
      std::ostringstream os;
      os.precision(17);
      bool first = true;
      const auto& terms = poly_.terms();
      for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Monomial& m = *it;
        const bool constant = std::all_of(m.exponents.begin(), m.exponents.end(), [](int e) { return e == 0; });
        double c = m.coeff;
        if (first) {
          if (c < 0) os << "-";
        } else {
          os << (c < 0 ? " - " : " + ");
        }
        c = std::abs(c);
        first = false;
        bool need_star = false;
        if (c != 1.0 || constant) {
          os << c;
          need_star = true;
        }
        for (int a = 0; a < 6; ++a) {
          if (m.exponents[a] == 0) continue;
          if (need_star) os << "*";
          need_star = true;
          os << "x" << (a + 1);
          if (m.exponents[a] > 1) os << "^" << m.exponents[a];
        }
      }
      return first ? "0" : os.str();
    }
  }
  return {};
}

Polynomial ScalarFieldSpec::to_polynomial() const {
  switch (kind_) {
    case Kind::coordinate:
      return Polynomial::coordinate(axis_);
    case Kind::polynomial:
      return poly_;
    case Kind::cartan_quartic: {
      Polynomial a, b;
      for (int i = 0; i < 3; ++i) {
        const auto u = Polynomial::coordinate(i);
        const auto v = Polynomial::coordinate(i + 3);
        a = a + u * u - v * v;
        b = b + u * v;
      }
      return a * a + 4.0 * (b * b);
    }
  }
  return {};
}

Jet2<double> ScalarFieldSpec::eval2(const Vec6& x) const {
  for (double c : x)
    if (!std::isfinite(c)) throw InvalidArgument("field evaluated at a non-finite point");
  return eval_field(*this, x);
}

Jet2<Rational> ScalarFieldSpec::eval2(const std::array<Rational, 6>& x) const {
  return eval_field(*this, x);
}

}  // namespace isomin
