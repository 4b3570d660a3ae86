#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "isomin/sphere.hpp"
#include "isomin/verification.hpp"

namespace isomin {

enum class Command { analyze, verify, catalog };
enum class Surface { equator, clifford_1_3, clifford_2_2, cartan };
enum class Format { json, csv };

/// Everything one CLI invocation needs. Values are set by key from strings
/// (the form they arrive in over the C API) and checked by validate().
struct RunConfig {
  Command command = Command::catalog;
  std::optional<Surface> surface;
  std::optional<double> t;
  int samples = 1000;
  std::uint64_t seed = 1;
  double tol = 1e-6;
  std::int64_t trials = 1000;
  std::optional<IdentityName> identity;  // unset: every identity
  std::int64_t height = 1000;
  std::string output = "-";
  Format format = Format::json;
  int workers = 1;
  bool timing = true;  // false writes "timing": null for byte-stable reports

  /// Keys: command, surface, t, samples, seed, tol, trials, identity, height,
  /// output, format, workers, timing. Throws InvalidArgument.
  void set(std::string_view key, std::string_view value);
  /// Cross-field checks (surface for analyze, t only for cartan).
  void validate() const;
};

/// Level set analysed for a named surface; t is required for (and only
/// accepted by) the cartan family.
LevelSpec surface_level(Surface s, std::optional<double> t);

/// Decimal radians, or "pi", "pi/N", "K*pi/N".
double parse_angle(std::string_view text);

std::string to_string(Command c);
std::string to_string(Surface s);
std::string to_string(Format f);

struct Report {
  nlohmann::ordered_json document;  // schema_version, command, config, results, timing
  std::string csv;
  int exit_code = 0;                // 0 success, 3 numerical/verification failure

  std::string render(Format f) const;
};

inline constexpr const char* kSchemaVersion = "1";

/// Dispatches on cfg.command. Throws InvalidArgument for bad configurations
/// and NumericalError when an analysis cannot complete (too many failed
/// projections).
Report run(const RunConfig& cfg);
Report run_analyze(const RunConfig& cfg);
Report run_verify(const RunConfig& cfg);
Report run_catalog(const RunConfig& cfg);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view s);
/// %.17g
std::string csv_number(double x);

}  // namespace isomin
