// isomin: command-line front end over the C API.
//
//   isomin analyze --surface cartan --t pi/8 --samples 1000 --seed 7
//   isomin verify --identity dpsi --trials 10000 --seed 1
//   isomin catalog --format csv
//
// Exit codes: 0 success, 2 configuration error, 3 numerical or verification
// failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <unistd.h>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "isomin/isomin.h"

namespace {

void log_error(const std::string& msg) {
  const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDERR_FILENO);
  if (color)
    std::cerr << "\033[31merror:\033[0m " << msg << "\n";
  else
    std::cerr << "error: " << msg << "\n";
}

struct Options {
  std::optional<std::string> surface, t, samples, seed, tol, trials, identity, height, workers;
  std::string output = "-";
  std::string format = "json";
  bool no_timing = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--tol", o.tol, "Invariant matching tolerance");
  cmd->add_option("--workers", o.workers, "Worker threads (default 1, deterministic)");
  cmd->add_option("-o,--output", o.output, "Report path, '-' for standard output");
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--no-timing", o.no_timing, "Write \"timing\": null so reports are byte-stable");
}

int run(const std::string& command, const Options& o) {
  isomin_config* cfg = nullptr;
  if (isomin_config_create(&cfg) != ISOMIN_OK) {
    log_error(isomin_last_error());
    return ISOMIN_ERR_INTERNAL;
  }
  std::vector<std::pair<const char*, std::string>> settings{{"command", command},
                                                             {"output", o.output},
                                                             {"format", o.format},
                                                             {"timing", o.no_timing ? "off" : "on"}};
  auto opt = [&](const char* key, const std::optional<std::string>& v) {
    if (v) settings.emplace_back(key, *v);
  };
  opt("surface", o.surface);
  opt("t", o.t);
  opt("samples", o.samples);
  opt("seed", o.seed);
  opt("tol", o.tol);
  opt("trials", o.trials);
  opt("identity", o.identity);
  opt("height", o.height);
  opt("workers", o.workers);

  for (const auto& [key, value] : settings) {
    if (const isomin_status st = isomin_config_set(cfg, key, value.c_str()); st != ISOMIN_OK) {
      log_error(isomin_last_error());
      isomin_config_destroy(cfg);
      return st;
    }
  }

  isomin_report* report = nullptr;
  const isomin_status st = isomin_run(cfg, &report);
  isomin_config_destroy(cfg);
  if (st != ISOMIN_OK) {
    log_error(isomin_last_error());
    return st;
  }

  const char* text = isomin_report_text(report, isomin_report_format(report));
  int code = isomin_report_exit_code(report);
  if (o.output == "-") {
    std::fputs(text, stdout);
  } else {
    std::ofstream out(o.output, std::ios::binary);
    out << text;
    if (!out) {
      log_error("cannot write " + o.output);
      code = ISOMIN_ERR_CONFIG;
    }
  }
  isomin_report_destroy(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal-curvature invariants of hypersurfaces in S^5 and exact identity checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", isomin_version());

  Options o;
  auto* analyze = app.add_subcommand("analyze", "Sample a level hypersurface and classify it");
  analyze->add_option("--surface", o.surface, "equator | cartan | clifford-1-3 | clifford-2-2")->required();
  analyze->add_option("--t", o.t, "Cartan family parameter in (0, pi/4); decimal radians or pi/8");
  analyze->add_option("--samples", o.samples, "Number of sample points (default 1000)");
  add_common(analyze, o);

  auto* verify = app.add_subcommand("verify", "Exact randomized sweep of an algebraic identity");
  verify->add_option("--identity", o.identity, "g2 | g3 | vandermonde | i-closed | i-sign | dpsi | recover (default: all)");
  verify->add_option("--trials", o.trials, "Number of random trials (default 1000)");
  verify->add_option("--height", o.height, "Bound on numerator/denominator of random rationals (default 1000)");
  add_common(verify, o);

  auto* catalog = app.add_subcommand("catalog", "List the isoparametric minimal models with their checks");
  add_common(catalog, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return ISOMIN_ERR_CONFIG;
  }

  const std::string command = analyze->parsed() ? "analyze" : verify->parsed() ? "verify" : "catalog";
  return run(command, o);
}
