#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dceopa/core.hpp"

namespace dceopa::cli {

// One resolved invocation. Rates are stored as a validated SystemConfig; grids
// and options keep the dimensionless CLI units (kappa*t, omega/Omega, ...).
struct RunConfig {
  std::string subcommand;
  std::optional<SystemConfig> system;

  // raw ratio parameters, kept for provenance comments and sweeps
  double kappa_over_2pi_hz = 0.0;
  double epsilon_over_kappa = 0.0;
  double eta_over_kappa = 0.0;
  double kappa_over_omega = 0.0;

  double t_max_kappa = 10.0;
  double tau_max_kappa = 10.0;
  int points = 1001;
  double theta_s = kPi / 2.0;
  bool theta_s_set = false;
  double t_s_kappa = 0.0;  // 0 = automatic quasi-steady reference
  bool t_s_set = false;
  double omega_max = 0.0;  // 0 = subcommand default (4 modulated, 3 constant pump)
  double normalize_at = 0.0;
  bool normalize_set = false;
  bool use_oracle_correlator = false;
  int jobs = 1;
  std::string output;  // empty = stdout

  std::optional<AnalogyParams> analogy;

  // sweep axes (singletons when not swept)
  std::vector<double> sweep_epsilon;
  std::vector<double> sweep_eta;
  std::vector<double> sweep_kappa_over_omega;
  std::vector<double> sweep_theta_s;
};

// Parses "<subcommand> --flag value ..." tokens. --config FILE merges a
// line-based "key = value" file ('#' comments); command-line flags override
// file entries. Throws UnknownKey, MissingRequired, or the config validation
// errors.
RunConfig parse_config(const std::vector<std::string>& args);

// Executes a parsed run and writes its CSV (file or stdout). Throws on error;
// never returns a partial file.
void run_command(const RunConfig& config);

// argv-level entry: maps ValidationError -> 2, NumericalError -> 3, success -> 0.
int main_entry(int argc, const char* const* argv);
int main_entry(const std::vector<std::string>& args);

// Locale-independent "%.12g"-style formatting used for every CSV number.
std::string format_number(double value);

}  // namespace dceopa::cli
