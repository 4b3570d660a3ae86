#include "isomin/rational.hpp"

#include <cmath>

#include "isomin/error.hpp"

namespace isomin {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 target expected");
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

Rational exact_from_double(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("non-finite value has no rational form");
  return Rational(x);
}

double to_double(const Rational& q) { return q.get_d(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string numerator_string(const Rational& q) { return q.get_num().get_str(); }
std::string denominator_string(const Rational& q) { return q.get_den().get_str(); }

}  // namespace isomin
