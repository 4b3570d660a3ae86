#include "isomin/rng.hpp"

#include <cmath>
#include <numbers>

#include "isomin/error.hpp"

namespace isomin {
namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint64_t RngStream::bits() const { return mix64(seed_ + (counter_ + 1) * kGamma); }

RngStream RngStream::split(std::uint64_t index) const {
  return RngStream(mix64(seed_ ^ mix64(index * kGamma + 0x632BE59BD9B4E019ULL)), 0);
}

Draw<double> draw_uniform(const RngStream& s, double lo, double hi) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
    throw InvalidArgument("uniform draw needs finite lo < hi");
  double x = lo + (hi - lo) * unit_interval(s.bits());
  if (x >= hi) x = std::nextafter(hi, lo);
  return {x, s.advanced()};
}

Draw<std::int64_t> draw_int(const RngStream& s, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InvalidArgument("integer draw needs lo <= hi");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  RngStream cur = s;
  if (span == 0) {  // full 64-bit range
    return {static_cast<std::int64_t>(cur.bits()), cur.advanced()};
  }
  // Largest multiple of span representable; reject above it.
  const std::uint64_t limit = (UINT64_MAX / span) * span;
  for (;;) {
    const std::uint64_t u = cur.bits();
    cur = cur.advanced();
    if (u < limit) return {lo + static_cast<std::int64_t>(u % span), cur};
  }
}

Draw<double> draw_normal(const RngStream& s) {
  // 1 - u keeps the logarithm argument in (0, 1].
  const double u1 = 1.0 - unit_interval(s.bits());
  const double u2 = unit_interval(s.advanced().bits());
  const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  return {z, s.advanced(2)};
}

Draw<Rational> draw_rational(const RngStream& s, std::int64_t height) {
  if (height < 1) throw InvalidArgument("rational draw needs height >= 1");
  auto [num, s1] = draw_int(s, -height, height);
  auto [den, s2] = draw_int(s1, 1, height);
  return {make_rational(num, den), s2};
}

}  // namespace isomin
