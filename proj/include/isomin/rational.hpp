#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace isomin {

// GMP keeps mpq_class canonical after every arithmetic operation: lowest
// terms, positive denominator.
using Rational = mpq_class;

/// num/den in lowest terms. Throws InvalidArgument when den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Exact binary value of a finite double.
Rational exact_from_double(double x);

double to_double(const Rational& q);

/// "num/den", or just "num" for integers.
std::string to_string(const Rational& q);
std::string numerator_string(const Rational& q);
std::string denominator_string(const Rational& q);

}  // namespace isomin
