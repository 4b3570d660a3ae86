#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isomin/identities.hpp"
#include "isomin/rng.hpp"

namespace isomin {

enum class IdentityName { g2, g3, vandermonde, i_closed, i_sign, dpsi, recover };

/// CLI spelling: g2, g3, vandermonde, i-closed, i-sign, dpsi, recover.
std::string to_string(IdentityName id);
std::optional<IdentityName> parse_identity(std::string_view s);
const std::vector<IdentityName>& all_identities();

/// One named input of a failing trial: exact rationals, or reals for the
/// floating-point identities.
struct CounterexampleField {
  std::string name;
  std::vector<Rational> exact;
  std::vector<double> real;
};

struct Counterexample {
  std::uint64_t trial = 0;
  std::string reason;
  std::vector<CounterexampleField> inputs;
};

struct IdentityVerdict {
  std::string identity_name;
  std::int64_t trials = 0;
  std::int64_t failures = 0;
  std::optional<Counterexample> first_counterexample;  // lowest failing trial index
  bool exact = true;
};

struct SweepParams {
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  std::int64_t height = 1000;  // bound on |numerator| and denominator of drawn rationals
  int workers = 1;
};

/// One trial: returns a counterexample on failure. Exceptions thrown by a
/// trial count as failures.
using TrialFn = std::function<std::optional<Counterexample>(const RngStream&, std::uint64_t trial)>;

/// Runs trials 0..trials-1, trial i on RngStream(seed).split(i), split into
/// contiguous blocks across workers. The verdict does not depend on the
/// worker count.
IdentityVerdict run_sweep(std::string name, bool exact, const SweepParams& params, const TrialFn& trial);

IdentityVerdict verify_identity(IdentityName id, const SweepParams& params);

/// Four distinct rationals of bounded height, sorted ascending.
Draw<Quadruple> draw_quadruple(const RngStream& s, std::int64_t height);
Draw<Rational4> draw_rational4(const RngStream& s, std::int64_t height);

}  // namespace isomin
