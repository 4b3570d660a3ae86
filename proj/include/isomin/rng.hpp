#pragma once

#include <cstdint>

#include "isomin/rational.hpp"

namespace isomin {

/// Counter-based random stream (SplitMix64 output function applied to
/// seed + counter * golden-gamma). A stream is an immutable value: every draw
/// returns the advanced stream alongside the drawn value, so identical
/// (seed, counter) pairs give identical draws on every platform.
class RngStream {
 public:
  explicit constexpr RngStream(std::uint64_t seed, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  constexpr std::uint64_t seed() const { return seed_; }
  constexpr std::uint64_t counter() const { return counter_; }

  /// Raw 64-bit output at the current counter.
  std::uint64_t bits() const;
  RngStream advanced(std::uint64_t steps = 1) const { return RngStream(seed_, counter_ + steps); }

  /// Independent child stream; trial i of a sweep uses split(i) so results do
  /// not depend on how trials are partitioned across workers.
  RngStream split(std::uint64_t index) const;

  friend bool operator==(const RngStream&, const RngStream&) = default;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

template <class T>
struct Draw {
  T value;
  RngStream next;
};

/// Uniform in [lo, hi). Throws InvalidArgument unless lo < hi (both finite).
Draw<double> draw_uniform(const RngStream& s, double lo = 0.0, double hi = 1.0);

/// Uniform integer in [lo, hi] (inclusive, unbiased by rejection).
Draw<std::int64_t> draw_int(const RngStream& s, std::int64_t lo, std::int64_t hi);

/// Standard normal via Box-Muller (consumes two raw draws).
Draw<double> draw_normal(const RngStream& s);

/// num uniform in [-height, height], den uniform in [1, height], then
/// reduced. Throws InvalidArgument when height < 1.
Draw<Rational> draw_rational(const RngStream& s, std::int64_t height);

}  // namespace isomin
