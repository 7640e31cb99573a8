#include "cli_app.hpp"

#include "ccool/ccool.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ccool_cli {
namespace {

struct ConfigDeleter {
  void operator()(ccool_config* c) const { ccool_config_free(c); }
};
struct RunDeleter {
  void operator()(ccool_run* r) const { ccool_run_free(r); }
};
struct ValidationDeleter {
  void operator()(ccool_validation* v) const { ccool_validation_free(v); }
};
using ConfigPtr = std::unique_ptr<ccool_config, ConfigDeleter>;

// Library failure carrying the status to turn into an exit code.
struct Failure : std::runtime_error {
  Failure(ccool_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  ccool_status status;
};

void check(ccool_status s) {
  if (s != CCOOL_OK) throw Failure(s, ccool_last_error());
}

int exitCodeFor(ccool_status s) {
  switch (s) {
    case CCOOL_ERR_PHYSICS: return kPhysicsError;
    case CCOOL_ERR_VALIDATION: return kValidationFailure;
    default: return kConfigError;
  }
}

ConfigPtr loadConfig(const std::string& path) {
  ccool_config* raw = nullptr;
  check(path.empty() ? ccool_config_new(&raw) : ccool_config_load(path.c_str(), &raw));
  ConfigPtr cfg(raw);
  check(ccool_config_check(cfg.get()));
  return cfg;
}

std::string echo(const ccool_config* cfg) {
  size_t needed = 0;
  check(ccool_config_echo(cfg, nullptr, 0, &needed));
  std::string s(needed, '\0');
  check(ccool_config_echo(cfg, s.data(), s.size(), nullptr));
  s.resize(needed - 1);
  return s;
}

double ratio(double beta, double beta0) { return beta0 == 0.0 ? NAN : beta / beta0; }

void writeRun(const ccool_config* cfg, std::ostream& os) {
  ccool_run* raw = nullptr;
  check(ccool_run_trajectory(cfg, &raw));
  std::unique_ptr<ccool_run, RunDeleter> run(raw);
  os << "n,beta1_ratio,beta2_ratio,beta3_ratio,Q,W,eta,heatBath\n";
  for (size_t i = 0; i < ccool_run_rows(run.get()); ++i) {
    ccool_cycle_row r;
    check(ccool_run_get_row(run.get(), i, &r));
    os << r.n << ',' << formatNumber(r.beta_ratio[0]) << ',' << formatNumber(r.beta_ratio[1]) << ','
       << formatNumber(r.beta_ratio[2]) << ',' << formatNumber(r.q) << ',' << formatNumber(r.w) << ','
       << formatNumber(r.eta_defined ? r.eta : NAN) << ',' << formatNumber(r.heat_bath) << '\n';
  }
}

void writeSweep(const ccool_config* cfg, const std::vector<double>& taus, std::ostream& os) {
  double bound = 0.0, single = 0.0;
  check(ccool_sweep_references(cfg, &bound, &single));
  std::vector<double> finals(taus.size());
  check(ccool_sweep_tau(cfg, taus.data(), taus.size(), finals.data()));
  os << "# reference,asymptotic_bound," << formatNumber(bound) << '\n';
  os << "# reference,single_application," << formatNumber(single) << '\n';
  os << "tau_T1,beta1_ratio_final\n";
  for (size_t i = 0; i < taus.size(); ++i) os << formatNumber(taus[i]) << ',' << formatNumber(finals[i]) << '\n';
}

void writeSurface(const ccool_config* cfg, const std::vector<double>& e2, const std::vector<double>& e3, std::ostream& os) {
  std::vector<double> eta(e2.size() * e3.size());
  std::vector<int> defined(eta.size());
  check(ccool_eta_surface(cfg, e2.data(), e2.size(), e3.data(), e3.size(), eta.data(), defined.data()));
  os << "deltaE2,deltaE3,eta1\n";
  for (size_t i = 0; i < e2.size(); ++i)
    for (size_t j = 0; j < e3.size(); ++j) {
      const size_t k = i * e3.size() + j;
      os << formatNumber(e2[i]) << ',' << formatNumber(e3[j]) << ',' << formatNumber(defined[k] ? eta[k] : NAN) << '\n';
    }
}

bool writeValidation(const ccool_config* cfg, std::ostream& os, std::ostream& err) {
  ccool_validation* raw = nullptr;
  check(ccool_validate(cfg, &raw));
  std::unique_ptr<ccool_validation, ValidationDeleter> v(raw);
  double beta0 = 0.0;
  check(ccool_config_get_beta0(cfg, &beta0));
  os << "n,beta_engine,beta_oracle,absdiff\n";
  for (size_t i = 0; i < ccool_validation_rows(v.get()); ++i) {
    ccool_validation_row r;
    check(ccool_validation_get_row(v.get(), i, &r));
    os << r.n << ',' << formatNumber(ratio(r.beta_engine, beta0)) << ',' << formatNumber(ratio(r.beta_oracle, beta0)) << ','
       << formatNumber(r.abs_diff) << '\n';
  }
  const bool ok = ccool_validation_passed(v.get()) != 0;
  err << "max deviation " << formatNumber(ccool_validation_max_deviation(v.get())) << ": " << (ok ? "PASS" : "FAIL")
      << '\n';
  return ok;
}

}  // namespace

std::string formatNumber(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<double> parseValues(const std::string& spec, bool allowInf) {
  auto number = [&](const std::string& s) -> double {
    if (allowInf && (s == "inf" || s == "INF")) return std::numeric_limits<double>::infinity();
    size_t used = 0;
    const double x = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(x)) throw std::invalid_argument("bad number '" + s + "'");
    return x;
  };
  std::vector<double> xs;
  if (spec.find(':') != std::string::npos) {
    const auto a = spec.find(':'), b = spec.find(':', a + 1);
    if (b == std::string::npos) throw std::invalid_argument("range must be min:max:steps");
    const double lo = number(spec.substr(0, a)), hi = number(spec.substr(a + 1, b - a - 1));
    const std::string stepsText = spec.substr(b + 1);
    size_t used = 0;
    const int steps = std::stoi(stepsText, &used);
    if (used != stepsText.size() || steps < 1) throw std::invalid_argument("range steps must be a positive integer");
    for (int i = 0; i < steps; ++i) xs.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
    return xs;
  }
  size_t start = 0;
  while (true) {
    const auto comma = spec.find(',', start);
    xs.push_back(number(spec.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return xs;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic algorithmic cooling simulator"};
  app.require_subcommand(1);
  std::string configPath, outPath, tauSpec = "0:4:41", gridSpec = "0.1:3:30,0.1:3:30";

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("--config", configPath, "run configuration file (defaults when omitted)");
    cmd->add_option("--out", outPath, "output CSV path (default stdout)");
  };
  CLI::App* runCmd = app.add_subcommand("run", "trajectory of beta, heat, work and efficiency per cycle");
  CLI::App* sweepCmd = app.add_subcommand("sweep-tau", "final beta_1 against bath contact time");
  CLI::App* surfaceCmd = app.add_subcommand("eta-surface", "first-cycle efficiency over (deltaE2, deltaE3)");
  CLI::App* validateCmd = app.add_subcommand("validate", "compare engine against the population oracle");
  for (auto* c : {runCmd, sweepCmd, surfaceCmd, validateCmd}) addCommon(c);
  sweepCmd->add_option("--tau", tauSpec, "contact times in T1: list a,b,c or range min:max:steps");
  surfaceCmd->add_option("--grid", gridSpec, "e2_min:e2_max:steps,e3_min:e3_max:steps");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  std::vector<double> taus, e2, e3;
  try {
    if (sweepCmd->parsed()) taus = parseValues(tauSpec, true);
    if (surfaceCmd->parsed()) {
      const auto comma = gridSpec.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("expected two ranges separated by ','");
      e2 = parseValues(gridSpec.substr(0, comma), false);
      e3 = parseValues(gridSpec.substr(comma + 1), false);
    }
  } catch (const std::exception& e) {
    err << "error: " << (sweepCmd->parsed() ? "--tau: " : "--grid: ") << e.what() << '\n';
    return kConfigError;
  }

  try {
    ConfigPtr cfg = loadConfig(configPath);
    std::ofstream file;
    if (!outPath.empty()) {
      file.open(outPath);
      if (!file) {
        err << "error: cannot open output file '" << outPath << "'\n";
        return kConfigError;
      }
    }
    std::ostream& os = outPath.empty() ? out : file;
    // the surface is defined for complete thermalization
    if (surfaceCmd->parsed()) check(ccool_config_set_tau(cfg.get(), INFINITY, CCOOL_TAU_T1));
    const std::string command = app.get_subcommands().front()->get_name();
    os << "# ccool " << command << ' ' << echo(cfg.get()) << '\n';

    if (runCmd->parsed()) {
      writeRun(cfg.get(), os);
    } else if (sweepCmd->parsed()) {
      writeSweep(cfg.get(), taus, os);
    } else if (surfaceCmd->parsed()) {
      writeSurface(cfg.get(), e2, e3, os);
    } else if (validateCmd->parsed()) {
      if (!writeValidation(cfg.get(), os, err)) return kValidationFailure;
    }
    os.flush();
    return kOk;
  } catch (const Failure& f) {
    err << "error: " << f.what() << '\n';
    return exitCodeFor(f.status);
  }
}

}  // namespace ccool_cli
