#include "isomin/run.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "isomin/catalog.hpp"
#include "isomin/error.hpp"
#include "isomin/shape.hpp"

namespace isomin {
namespace {

using json = nlohmann::ordered_json;

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T v{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw InvalidArgument("invalid value '" + std::string(text) + "' for " + std::string(key));
  return v;
}

double parse_double(std::string_view key, std::string_view text) {
  const double v = parse_number<double>(key, text);
  if (!std::isfinite(v)) throw InvalidArgument(std::string(key) + " must be finite");
  return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "1" || text == "true" || text == "on" || text == "yes") return true;
  if (text == "0" || text == "false" || text == "off" || text == "no") return false;
  throw InvalidArgument("invalid boolean '" + std::string(text) + "' for " + std::string(key));
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json rational_json(const Rational& q) {
  return json{{"num", numerator_string(q)}, {"den", denominator_string(q)}};
}

json counterexample_json(const Counterexample& c) {
  json inputs = json::object();
  for (const auto& f : c.inputs) {
    json arr = json::array();
    for (const auto& q : f.exact) arr.push_back(rational_json(q));
    for (double x : f.real) arr.push_back(x);
    inputs[f.name] = arr;
  }
  return json{{"trial", c.trial}, {"reason", c.reason}, {"inputs", inputs}};
}

json config_json(const RunConfig& cfg) {
  json c;
  c["command"] = to_string(cfg.command);
  c["surface"] = cfg.surface ? json(to_string(*cfg.surface)) : json(nullptr);
  c["t"] = optional_number(cfg.t);
  c["samples"] = cfg.samples;
  c["seed"] = cfg.seed;
  c["tol"] = cfg.tol;
  c["trials"] = cfg.trials;
  c["identity"] = cfg.identity ? json(to_string(*cfg.identity)) : json(nullptr);
  c["height"] = cfg.height;
  c["output"] = cfg.output;
  c["format"] = to_string(cfg.format);
  c["workers"] = cfg.workers;
  return c;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
  return s;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string s;
  for (std::size_t i = 0; i < fields.size(); ++i) s += (i ? "," : "") + fields[i];
  return s + "\r\n";
}

std::string csv_optional(const std::optional<double>& v) { return v ? csv_number(*v) : ""; }

Report finish(const RunConfig& cfg, json results, std::string csv, int exit_code,
              std::chrono::steady_clock::time_point start) {
  Report r;
  r.document["schema_version"] = kSchemaVersion;
  r.document["command"] = to_string(cfg.command);
  r.document["config"] = config_json(cfg);
  r.document["results"] = std::move(results);
  if (cfg.timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    r.document["timing"] = json{{"wall_seconds", dt.count()}};
  } else {
    r.document["timing"] = nullptr;
  }
  r.csv = std::move(csv);
  r.exit_code = exit_code;
  return r;
}

}  // namespace

LevelSpec surface_level(Surface s, std::optional<double> t) {
  if ((s == Surface::cartan) != t.has_value())
    throw InvalidArgument("t is required for, and only accepted by, the cartan surface");
  auto from_model = [](const IsoModel& m) { return LevelSpec{*m.field, *m.level}; };
  switch (s) {
    case Surface::equator:
      return from_model(equator_model());
    case Surface::clifford_1_3:
      return from_model(clifford_model(1, 3));
    case Surface::clifford_2_2:
      return from_model(clifford_model(2, 2));
    case Surface::cartan:
      return {ScalarFieldSpec::cartan_quartic(), cartan_level(*t)};
  }
  throw InvalidArgument("unknown surface");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::analyze:
      return "analyze";
    case Command::verify:
      return "verify";
    case Command::catalog:
      return "catalog";
  }
  return {};
}

std::string to_string(Surface s) {
  switch (s) {
    case Surface::equator:
      return "equator";
    case Surface::clifford_1_3:
      return "clifford-1-3";
    case Surface::clifford_2_2:
      return "clifford-2-2";
    case Surface::cartan:
      return "cartan";
  }
  return {};
}

std::string to_string(Format f) { return f == Format::json ? "json" : "csv"; }

double parse_angle(std::string_view text) {
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) return parse_double("t", text);

  double factor = 1.0;
  if (pi_pos > 0) {
    std::string_view head = text.substr(0, pi_pos);
    if (head.back() != '*') throw InvalidArgument("invalid angle '" + std::string(text) + "'");
    factor = parse_double("t", head.substr(0, head.size() - 1));
  }
  std::string_view tail = text.substr(pi_pos + 2);
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw InvalidArgument("invalid angle '" + std::string(text) + "'");
    divisor = parse_double("t", tail.substr(1));
    if (divisor == 0.0) throw InvalidArgument("angle divisor is zero");
  }
  return factor * std::numbers::pi / divisor;
}

void RunConfig::set(std::string_view key, std::string_view value) {
  if (key == "command") {
    if (value == "analyze")
      command = Command::analyze;
    else if (value == "verify")
      command = Command::verify;
    else if (value == "catalog")
      command = Command::catalog;
    else
      throw InvalidArgument("unknown command '" + std::string(value) + "'");
  } else if (key == "surface") {
    if (value == "equator")
      surface = Surface::equator;
    else if (value == "cartan")
      surface = Surface::cartan;
    else if (value == "clifford-1-3")
      surface = Surface::clifford_1_3;
    else if (value == "clifford-2-2")
      surface = Surface::clifford_2_2;
    else
      throw InvalidArgument("unknown surface '" + std::string(value) + "'");
  } else if (key == "t") {
    const double v = parse_angle(value);
    if (!(v > 0.0 && v < std::numbers::pi / 4)) throw InvalidArgument("t must lie in (0, pi/4)");
    t = v;
  } else if (key == "samples") {
    samples = parse_number<int>(key, value);
    if (samples < 1) throw InvalidArgument("samples must be >= 1");
  } else if (key == "seed") {
    seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "tol") {
    tol = parse_double(key, value);
    if (!(tol > 0.0)) throw InvalidArgument("tol must be > 0");
  } else if (key == "trials") {
    trials = parse_number<std::int64_t>(key, value);
    if (trials < 1) throw InvalidArgument("trials must be >= 1");
  } else if (key == "identity") {
    identity = parse_identity(value);
    if (!identity) throw InvalidArgument("unknown identity '" + std::string(value) + "'");
  } else if (key == "height") {
    height = parse_number<std::int64_t>(key, value);
    if (height < 1) throw InvalidArgument("height must be >= 1");
  } else if (key == "output") {
    if (value.empty()) throw InvalidArgument("output path is empty");
    output = std::string(value);
  } else if (key == "format") {
    if (value == "json")
      format = Format::json;
    else if (value == "csv")
      format = Format::csv;
    else
      throw InvalidArgument("unknown format '" + std::string(value) + "'");
  } else if (key == "workers") {
    workers = parse_number<int>(key, value);
    if (workers < 1) throw InvalidArgument("workers must be >= 1");
  } else if (key == "timing") {
    timing = parse_bool(key, value);
  } else {
    throw InvalidArgument("unknown configuration key '" + std::string(key) + "'");
  }
}

void RunConfig::validate() const {
  if (command != Command::analyze) return;
  if (!surface) throw InvalidArgument("analyze needs a surface");
  if (*surface == Surface::cartan && !t) throw InvalidArgument("analyze --surface cartan needs t");
  if (*surface != Surface::cartan && t) throw InvalidArgument("t only applies to the cartan surface");
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string Report::render(Format f) const {
  if (f == Format::csv) return csv;
  return document.dump(2) + "\n";
}

Report run(const RunConfig& cfg) {
  cfg.validate();
  switch (cfg.command) {
    case Command::analyze:
      return run_analyze(cfg);
    case Command::verify:
      return run_verify(cfg);
    case Command::catalog:
      return run_catalog(cfg);
  }
  throw InvalidArgument("unknown command");
}

Report run_analyze(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.command != Command::analyze) throw InvalidArgument("run_analyze needs command analyze");
  const auto start = std::chrono::steady_clock::now();
  const LevelSpec spec = surface_level(*cfg.surface, cfg.t);
  SweepTolerances tols;
  tols.invariant_tol = cfg.tol;
  const SurfaceStats st = sweep_analyze(spec, cfg.samples, cfg.seed, tols, cfg.workers);

  json hist = json::object();
  std::string hist_csv;
  for (const auto& [g, count] : st.g_histogram) {
    hist[std::to_string(g)] = count;
    hist_csv += (hist_csv.empty() ? "" : ";") + std::to_string(g) + ":" + std::to_string(count);
  }
  json res;
  res["surface"] = to_string(*cfg.surface);
  res["level"] = spec.level;
  res["n_points"] = st.n_points;
  res["n_failed"] = st.n_failed;
  res["max_abs_f1"] = st.max_abs_f1;
  res["S_mean"] = st.S_mean;
  res["S_min"] = st.S_min;
  res["S_max"] = st.S_max;
  res["f3_mean"] = st.f3_mean;
  res["f3_spread"] = st.f3_spread;
  res["f3_max_abs"] = st.f3_max_abs;
  res["K_mean"] = st.K_mean;
  res["K_min"] = st.K_min;
  res["K_max"] = st.K_max;
  res["R_min"] = st.R_min;
  res["R_max"] = st.R_max;
  res["g_histogram"] = hist;
  res["theta0_mean"] = optional_number(st.theta0_mean);
  res["theta0_min"] = optional_number(st.theta0_min);
  res["theta0_max"] = optional_number(st.theta0_max);
  res["theta0_residual_max"] = optional_number(st.theta0_residual_max);
  res["classification_verdict"] = to_string(st.classification_verdict);
  res["failure_samples"] = st.failure_samples;

  std::string csv = csv_row({"surface", "level", "n_points", "n_failed", "max_abs_f1", "S_mean", "S_min",
                             "S_max", "f3_mean", "f3_spread", "f3_max_abs", "K_mean", "K_min", "K_max",
                             "R_min", "R_max", "g_histogram", "theta0_mean", "theta0_min", "theta0_max",
                             "theta0_residual_max", "classification_verdict"});
  csv += csv_row({csv_field(to_string(*cfg.surface)), csv_number(spec.level), std::to_string(st.n_points),
                  std::to_string(st.n_failed), csv_number(st.max_abs_f1), csv_number(st.S_mean),
                  csv_number(st.S_min), csv_number(st.S_max), csv_number(st.f3_mean), csv_number(st.f3_spread),
                  csv_number(st.f3_max_abs), csv_number(st.K_mean), csv_number(st.K_min), csv_number(st.K_max),
                  csv_number(st.R_min), csv_number(st.R_max), csv_field(hist_csv), csv_optional(st.theta0_mean),
                  csv_optional(st.theta0_min), csv_optional(st.theta0_max), csv_optional(st.theta0_residual_max),
                  to_string(st.classification_verdict)});
  return finish(cfg, std::move(res), std::move(csv), 0, start);
}

Report run_verify(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  SweepParams params{cfg.trials, cfg.seed, cfg.height, cfg.workers};
  std::vector<IdentityName> ids;
  if (cfg.identity)
    ids.push_back(*cfg.identity);
  else
    ids = all_identities();

  json res = json::array();
  std::string csv = csv_row({"identity_name", "trials", "failures", "exact", "first_failure_trial",
                             "first_failure_reason"});
  int exit_code = 0;
  for (IdentityName id : ids) {
    const IdentityVerdict v = verify_identity(id, params);
    if (v.failures != 0) exit_code = 3;
    json j;
    j["identity_name"] = v.identity_name;
    j["trials"] = v.trials;
    j["failures"] = v.failures;
    j["first_counterexample"] = v.first_counterexample ? counterexample_json(*v.first_counterexample) : json(nullptr);
    j["exact"] = v.exact;
    res.push_back(std::move(j));
    csv += csv_row({csv_field(v.identity_name), std::to_string(v.trials), std::to_string(v.failures),
                    v.exact ? "true" : "false",
                    v.first_counterexample ? std::to_string(v.first_counterexample->trial) : "",
                    v.first_counterexample ? csv_field(v.first_counterexample->reason) : ""});
  }
  return finish(cfg, std::move(res), std::move(csv), exit_code, start);
}

Report run_catalog(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  json res = json::array();
  std::string csv = csv_row({"name", "g", "multiplicities", "S_expected", "R", "theta0", "curvatures",
                             "field", "level", "all_checks_passed"});
  int exit_code = 0;
  for (const auto& m : all_models()) {
    const ModelCheckReport chk = model_check(m);
    if (!chk.all_passed()) exit_code = 3;
    json curv = json::array();
    std::string curv_csv;
    for (std::size_t k = 0; k < m.curvatures.size(); ++k) {
      curv.push_back(json{{"closed_form", m.closed_forms[k]},
                          {"value", m.curvatures[k].convert_to<double>()},
                          {"value_50", m.curvatures[k].str(50)},
                          {"multiplicity", m.multiplicities[k]}});
      curv_csv += (k ? ";" : "") + m.closed_forms[k] + ":" + std::to_string(m.multiplicities[k]);
    }
    json checks = json::object();
    for (const auto& c : chk.checks) checks[c.name] = c.passed;
    const double theta0 = m.theta0 ? m.theta0->convert_to<double>() : std::nan("");

    json j;
    j["name"] = m.label();
    j["g"] = m.g;
    j["multiplicities"] = m.multiplicities;
    j["curvatures"] = curv;
    j["S_expected"] = m.s_expected.convert_to<double>();
    j["R"] = chk.scalar_curvature.convert_to<double>();
    j["theta0"] = m.theta0 ? json(theta0) : json(nullptr);
    j["field"] = m.field ? json(m.field->describe()) : json(nullptr);
    j["level"] = m.level ? json(*m.level) : json(nullptr);
    j["checks"] = checks;
    j["all_checks_passed"] = chk.all_passed();
    res.push_back(std::move(j));

    csv += csv_row({csv_field(m.label()), std::to_string(m.g), csv_field(join_ints(m.multiplicities)),
                    csv_number(m.s_expected.convert_to<double>()),
                    csv_number(chk.scalar_curvature.convert_to<double>()), m.theta0 ? csv_number(theta0) : "",
                    csv_field(curv_csv), m.field ? csv_field(m.field->describe()) : "",
                    m.level ? csv_number(*m.level) : "", chk.all_passed() ? "true" : "false"});
  }
  return finish(cfg, std::move(res), std::move(csv), exit_code, start);
}

}  // namespace isomin
