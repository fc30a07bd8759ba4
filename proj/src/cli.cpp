#include "dceopa/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "dceopa/analytics.hpp"
#include "dceopa/oracle.hpp"
#include "dceopa/special.hpp"
#include "dceopa/spectrum.hpp"

namespace dceopa::cli {

namespace {

const std::set<std::string> kSubcommands = {"photons", "squeezing", "g2",     "mandel",
                                            "spectrum", "analogy",  "verify", "sweep"};

// Every accepted key, shared between config files and --flags.
const std::set<std::string> kKeys = {
    "kappa_over_2pi_hz", "epsilon_over_kappa", "eta_over_kappa", "kappa_over_omega",
    "t_max_kappa",       "tau_max_kappa",      "points",         "theta_s",
    "t_s_kappa",         "omega_max",          "normalize_at",   "oracle",
    "jobs",              "output",             "cavity_length_m", "crystal_length_m",
    "crystal_index",     "sweep_epsilon_over_kappa", "sweep_eta_over_kappa",
    "sweep_kappa_over_omega", "sweep_theta_s"};

const std::set<std::string> kBoolKeys = {"oracle"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double value = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ValidationError("value for '" + key + "' is not a number: '" + t + "'");
  return value;
}

int parse_int(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size())
    throw ValidationError("value for '" + key + "' is not an integer: '" + t + "'");
  return value;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, item));
  if (out.empty()) throw ValidationError("empty list for '" + key + "'");
  return out;
}

using KeyValues = std::map<std::string, std::string>;

KeyValues parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file '" + path + "'");
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ValidationError("config line " + std::to_string(lineno) + " is not 'key = value'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (!kKeys.count(key)) throw UnknownKey("unknown config key '" + key + "'");
    kv[key] = value;
  }
  return kv;
}

std::string flag_to_key(const std::string& flag) {
  std::string key = flag.substr(2);
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 12);
  return std::string(buf, ptr);
}

RunConfig parse_config(const std::vector<std::string>& args) {
  if (args.empty()) throw MissingRequired("no subcommand given");
  RunConfig rc;
  rc.subcommand = args[0];
  if (!kSubcommands.count(rc.subcommand))
    throw ValidationError("unknown subcommand '" + rc.subcommand + "'");

  KeyValues flags;
  std::string config_path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0) throw ValidationError("expected a --flag, got '" + a + "'");
    const std::string key = flag_to_key(a);
    if (key == "config") {
      if (++i >= args.size()) throw MissingRequired("--config needs a path");
      config_path = args[i];
      continue;
    }
    if (!kKeys.count(key)) throw UnknownKey("unknown flag '" + a + "'");
    if (kBoolKeys.count(key)) {
      flags[key] = "1";
      continue;
    }
    if (++i >= args.size()) throw MissingRequired("flag '" + a + "' needs a value");
    flags[key] = args[i];
  }

  KeyValues kv;
  if (!config_path.empty()) kv = parse_config_file(config_path);
  for (const auto& [k, v] : flags) kv[k] = v;  // flags override file entries

  auto has = [&](const char* k) { return kv.count(k) != 0; };
  auto num = [&](const char* k) { return parse_double(k, kv.at(k)); };

  // analogy runs can be geometry-only; sweep validates each grid cell itself
  const bool needs_system =
      rc.subcommand != "sweep" && (rc.subcommand != "analogy" || has("kappa_over_2pi_hz"));
  if (rc.subcommand != "analogy" && !has("kappa_over_2pi_hz"))
    throw MissingRequired("kappa_over_2pi_hz is required");
  if (rc.subcommand == "sweep") rc.kappa_over_2pi_hz = num("kappa_over_2pi_hz");

  if (has("epsilon_over_kappa")) rc.epsilon_over_kappa = num("epsilon_over_kappa");
  if (has("eta_over_kappa")) rc.eta_over_kappa = num("eta_over_kappa");
  if (has("kappa_over_omega")) rc.kappa_over_omega = num("kappa_over_omega");
  if (has("t_max_kappa")) rc.t_max_kappa = num("t_max_kappa");
  if (has("tau_max_kappa")) rc.tau_max_kappa = num("tau_max_kappa");
  if (has("points")) rc.points = parse_int("points", kv.at("points"));
  if (has("theta_s")) {
    rc.theta_s = num("theta_s");
    rc.theta_s_set = true;
  }
  if (has("t_s_kappa")) {
    rc.t_s_kappa = num("t_s_kappa");
    rc.t_s_set = true;
  }
  if (has("omega_max")) rc.omega_max = num("omega_max");
  if (has("normalize_at")) {
    rc.normalize_at = num("normalize_at");
    rc.normalize_set = true;
  }
  if (has("oracle")) rc.use_oracle_correlator = true;
  if (has("jobs")) rc.jobs = parse_int("jobs", kv.at("jobs"));
  if (has("output")) rc.output = kv.at("output");

  if (rc.points < 2) throw ValidationError("points must be >= 2");
  if (rc.jobs < 1) throw ValidationError("jobs must be >= 1");
  if (!(rc.t_max_kappa > 0.0)) throw ValidationError("t_max_kappa must be positive");
  if (!(rc.tau_max_kappa > 0.0)) throw ValidationError("tau_max_kappa must be positive");

  if (has("cavity_length_m") || has("crystal_length_m") || has("crystal_index")) {
    if (!(has("cavity_length_m") && has("crystal_length_m") && has("crystal_index")))
      throw MissingRequired("analogy needs cavity_length_m, crystal_length_m, crystal_index");
    rc.analogy = AnalogyParams{num("cavity_length_m"), num("crystal_length_m"),
                               num("crystal_index")};
  }
  if (rc.subcommand == "analogy" && !rc.analogy)
    throw MissingRequired("analogy needs cavity_length_m, crystal_length_m, crystal_index");

  if (needs_system) {
    if (!has("kappa_over_2pi_hz")) throw MissingRequired("kappa_over_2pi_hz is required");
    rc.kappa_over_2pi_hz = num("kappa_over_2pi_hz");
    if (!(rc.kappa_over_2pi_hz > 0.0)) throw NonPositiveRate("kappa_over_2pi_hz must be positive");
    const double kappa = kTwoPi * rc.kappa_over_2pi_hz;
    if (rc.eta_over_kappa > 0.0 && !has("kappa_over_omega"))
      throw MissingRequired("kappa_over_omega is required when eta_over_kappa > 0");
    double omega = 0.0;
    if (rc.eta_over_kappa > 0.0) {
      if (!(rc.kappa_over_omega > 0.0)) throw NonPositiveRate("kappa_over_omega must be positive");
      omega = kappa / rc.kappa_over_omega;
    }
    rc.system = validate_config(
        PumpProfile{rc.epsilon_over_kappa * kappa, rc.eta_over_kappa * kappa, omega},
        CavityParams{kappa}, rc.analogy);
  }

  if (rc.subcommand == "sweep") {
    auto axis = [&](const char* k, double fallback) {
      return has(k) ? parse_list(k, kv.at(k)) : std::vector<double>{fallback};
    };
    rc.sweep_epsilon = axis("sweep_epsilon_over_kappa", rc.epsilon_over_kappa);
    rc.sweep_eta = axis("sweep_eta_over_kappa", rc.eta_over_kappa);
    rc.sweep_kappa_over_omega = axis("sweep_kappa_over_omega", rc.kappa_over_omega);
    rc.sweep_theta_s = axis("sweep_theta_s", rc.theta_s);
    const std::size_t total = rc.sweep_epsilon.size() * rc.sweep_eta.size() *
                              rc.sweep_kappa_over_omega.size() * rc.sweep_theta_s.size();
    if (total > 10000) throw GridTooLarge("sweep grid exceeds 1e4 points");
  }
  return rc;
}

namespace {

class Csv {
public:
  void comment(const std::string& text) { body_ += "# " + text + "\n"; }
  void header(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) body_ += (i ? "," : "") + cols[i];
    body_ += "\n";
  }
  void row(const std::vector<double>& vals) {
    for (std::size_t i = 0; i < vals.size(); ++i)
      body_ += (i ? "," : "") + format_number(vals[i]);
    body_ += "\n";
  }
  void raw_row(const std::vector<std::string>& vals) {
    for (std::size_t i = 0; i < vals.size(); ++i) body_ += (i ? "," : "") + vals[i];
    body_ += "\n";
  }
  const std::string& str() const { return body_; }

private:
  std::string body_;
};

void emit(const RunConfig& rc, const Csv& csv) {
  if (rc.output.empty()) {
    std::cout << csv.str();
    return;
  }
  std::ofstream out(rc.output, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot open output path '" + rc.output + "'");
  out << csv.str();
  if (!out) {
    out.close();
    std::error_code ec;
    std::filesystem::remove(rc.output, ec);
    throw ValidationError("failed writing output path '" + rc.output + "'");
  }
}

void provenance(Csv& csv, const RunConfig& rc) {
  csv.comment("dceopa " + rc.subcommand);
  csv.comment("kappa_over_2pi_hz = " + format_number(rc.kappa_over_2pi_hz));
  csv.comment("epsilon_over_kappa = " + format_number(rc.epsilon_over_kappa));
  csv.comment("eta_over_kappa = " + format_number(rc.eta_over_kappa));
  if (rc.eta_over_kappa > 0.0)
    csv.comment("kappa_over_omega = " + format_number(rc.kappa_over_omega));
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

// Reference time for g2/mandel/spectrum: explicit t_s wins, otherwise the
// quasi-steady default, phase-aligned when theta_s was given.
double reference_time(const RunConfig& rc, const SystemConfig& sys) {
  if (rc.t_s_set) return rc.t_s_kappa / sys.kappa();
  if (rc.theta_s_set && sys.modulated()) return aligned_reference_time(sys, rc.theta_s);
  return steady_reference_time(sys);
}

void run_photons(const RunConfig& rc, bool with_squeezing) {
  const SystemConfig& sys = *rc.system;
  Csv csv;
  provenance(csv, rc);
  csv.comment("t_max_kappa = " + format_number(rc.t_max_kappa));
  csv.comment("points = " + format_number(rc.points));
  std::vector<std::string> cols = {"kappa_t", "omega_t",        "n_opa",     "n_eta",
                                   "n_interference", "n_casimir", "n_total"};
  if (with_squeezing) {
    cols.push_back("s1");
    cols.push_back("s2");
  }
  csv.header(cols);
  const auto ts = linspace(0.0, rc.t_max_kappa / sys.kappa(), rc.points);
  for (double t : ts) {
    const PhotonBreakdown b = photon_breakdown(sys, t);
    std::vector<double> row = {sys.kappa() * t,  sys.omega_mod() * t, b.n_opa,
                               b.n_eta,          b.n_interference,    b.n_casimir,
                               b.n_total};
    if (with_squeezing) {
      const SqueezingPair s = squeezing(sys, t);
      row.push_back(s.s1);
      row.push_back(s.s2);
    }
    csv.row(row);
  }
  emit(rc, csv);
}

void run_g2(const RunConfig& rc) {
  const SystemConfig& sys = *rc.system;
  const double t_ref = reference_time(rc, sys);
  Csv csv;
  provenance(csv, rc);
  csv.comment("kappa_t_ref = " + format_number(sys.kappa() * t_ref));
  csv.comment("tau_max_kappa = " + format_number(rc.tau_max_kappa));
  const bool mod = sys.modulated();
  csv.header({mod ? "omega_tau" : "kappa_tau", "g2", "g2_normalized"});
  const auto taus = linspace(0.0, rc.tau_max_kappa / sys.kappa(), rc.points);
  const double g2_zero = g2(sys, t_ref, 0.0);
  for (double tau : taus) {
    const double value = g2(sys, t_ref, tau);
    const double axis = mod ? sys.omega_mod() * tau : sys.kappa() * tau;
    csv.row({axis, value, value / g2_zero});
  }
  emit(rc, csv);
}

void run_mandel(const RunConfig& rc) {
  const SystemConfig& sys = *rc.system;
  Csv csv;
  provenance(csv, rc);
  csv.comment("t_max_kappa = " + format_number(rc.t_max_kappa));
  const bool mod = sys.modulated();
  csv.header({mod ? "omega_t" : "kappa_t", "q"});
  const auto ts = linspace(0.0, rc.t_max_kappa / sys.kappa(), rc.points);
  for (double t : ts) {
    double q = std::numeric_limits<double>::quiet_NaN();
    try {
      q = mandel_q(sys, t);
    } catch (const VacuumReference&) {
      // Q is undefined at grid points with n ~ 0 (t = 0); emit nan.
    }
    csv.row({mod ? sys.omega_mod() * t : sys.kappa() * t, q});
  }
  emit(rc, csv);
}

void run_spectrum(const RunConfig& rc) {
  const SystemConfig& sys = *rc.system;
  const bool mod = sys.modulated();
  const double unit = mod ? sys.omega_mod() : sys.kappa();
  const double omega_max = rc.omega_max > 0.0 ? rc.omega_max : (mod ? 4.0 : 3.0);
  const double t_s = reference_time(rc, sys);
  const auto axis = linspace(-omega_max, omega_max, rc.points);
  std::vector<double> omegas(axis.size());
  for (std::size_t i = 0; i < axis.size(); ++i) omegas[i] = axis[i] * unit;

  SpectrumOptions opt;
  opt.source = rc.use_oracle_correlator ? CorrelatorSource::OracleRegression
                                        : CorrelatorSource::ClosedForm;
  const SpectrumSeries s = intracavity_spectrum(sys, t_s, omegas, opt);
  const double ref =
      rc.normalize_set ? rc.normalize_at * unit : (mod ? sys.omega_mod() : sys.epsilon());
  const SpectrumSeries sn = normalize(s, ref);
  const SpectrumSeries so = output_spectrum(s, sys.cavity());

  Csv csv;
  provenance(csv, rc);
  csv.comment("kappa_t_s = " + format_number(sys.kappa() * t_s));
  csv.comment("theta_s = " + format_number(s.theta_s));
  csv.comment("normalize_at_omega = " + format_number(ref));
  csv.comment("correlator = " + std::string(rc.use_oracle_correlator ? "oracle" : "closed-form"));
  csv.header({mod ? "omega_over_Omega" : "omega_over_kappa", "s", "s_normalized", "s_out"});
  for (std::size_t i = 0; i < axis.size(); ++i)
    csv.row({axis[i], s.values[i], sn.values[i], so.values[i]});
  emit(rc, csv);
}

void run_analogy(const RunConfig& rc) {
  const AnalogyParams& an = *rc.analogy;
  Csv csv;
  csv.comment("dceopa analogy");
  csv.header({"quantity", "value"});
  csv.raw_row({"effective_length_m", format_number(an.effective_length())});
  double peak = 0.0;
  bool degenerate = true;
  if (rc.system) {
    const SystemConfig& sys = *rc.system;
    degenerate = modulation_is_degenerate(sys.pump());
    if (!degenerate) peak = 2.0 * an.effective_length() * sys.eta_tilde();
    csv.raw_row({"peak_mirror_displacement_m", format_number(peak)});
    csv.raw_row({"max_speed_over_c", format_number(max_mirror_speed_ratio(an, sys.cavity()))});
  }
  if (rc.output.empty()) {
    std::cout << "effective cavity length L0 = " << format_number(an.effective_length())
              << " m\n";
    if (rc.system) {
      std::cout << "peak mirror displacement = " << format_number(peak) << " m";
      if (degenerate) std::cout << " (degenerate: eta = 0, displacement identically zero)";
      std::cout << "\nmax mirror speed / c = "
                << format_number(max_mirror_speed_ratio(an, rc.system->cavity())) << "\n";
    }
  } else {
    emit(rc, csv);
  }
}

void run_verify(const RunConfig& rc) {
  const SystemConfig& sys = *rc.system;
  const double kappa = sys.kappa();
  const auto ts = linspace(0.0, rc.t_max_kappa / kappa, rc.points);
  const double t_ref = reference_time(rc, sys);
  const auto taus = linspace(0.0, rc.tau_max_kappa / kappa, rc.points);

  const IntegratorSettings settings = default_integrator_settings(
      sys, std::max(ts.back(), t_ref + taus.back()));
  const auto oracle_moments = integrate_moments(sys, settings, ts);
  const auto oracle_reg = integrate_regression(sys, settings, t_ref, taus);

  std::vector<double> closed_n(ts.size()), closed_v1(ts.size()), closed_v2(ts.size());
  std::vector<double> oracle_n(ts.size()), oracle_v1(ts.size()), oracle_v2(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const MomentState m = quadrature_variances(sys, ts[i]);
    closed_n[i] = m.n;
    closed_v1[i] = m.v1;
    closed_v2[i] = m.v2;
    oracle_n[i] = oracle_moments[i].n;
    oracle_v1[i] = oracle_moments[i].v1;
    oracle_v2[i] = oracle_moments[i].v2;
  }
  std::vector<double> closed_cn(taus.size()), closed_ca(taus.size());
  std::vector<double> oracle_cn(taus.size()), oracle_ca(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const TwoTimeCorrelators c = two_time(sys, t_ref, taus[i]);
    closed_cn[i] = c.c_normal;
    closed_ca[i] = c.c_anomalous;
    oracle_cn[i] = oracle_reg[i].c_normal;
    oracle_ca[i] = oracle_reg[i].c_anomalous;
  }

  Csv csv;
  provenance(csv, rc);
  csv.comment("t_max_kappa = " + format_number(rc.t_max_kappa));
  csv.comment("tau_max_kappa = " + format_number(rc.tau_max_kappa));
  csv.comment("kappa_t_ref = " + format_number(kappa * t_ref));
  csv.comment("rk4_step_kappa = " + format_number(settings.step * kappa));
  csv.header({"quantity", "max_rel_error", "worst_time"});
  const OracleReport reports[] = {
      compare(closed_n, oracle_n, ts, "n_total"),
      compare(closed_v1, oracle_v1, ts, "v1"),
      compare(closed_v2, oracle_v2, ts, "v2"),
      compare(closed_cn, oracle_cn, taus, "c_normal"),
      compare(closed_ca, oracle_ca, taus, "c_anomalous"),
  };
  for (const auto& r : reports)
    csv.raw_row({r.quantity, format_number(r.max_rel_error), format_number(r.worst_time)});
  emit(rc, csv);
}

struct SweepRow {
  double eps, eta, kom, theta;
  std::vector<double> values;
};

SweepRow sweep_cell(const RunConfig& rc, double eps, double eta, double kom, double theta) {
  const double kappa = kTwoPi * rc.kappa_over_2pi_hz;
  const double omega = eta > 0.0 ? kappa / kom : 0.0;
  if (eta > 0.0 && !(kom > 0.0)) throw NonPositiveRate("kappa_over_omega must be positive");
  const SystemConfig sys = validate_config(PumpProfile{eps * kappa, eta * kappa, omega},
                                           CavityParams{kappa}, std::nullopt);
  const double t_ref = sys.modulated() ? aligned_reference_time(sys, theta)
                                       : steady_reference_time(sys);
  const PhotonBreakdown b = photon_breakdown(sys, t_ref);
  const SqueezingPair sq = squeezing(sys, t_ref);
  const MomentState m = quadrature_variances(sys, t_ref);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  double q = nan, g20 = nan;
  if (m.n > kVacuumGuard) {
    q = mandel_q(sys, t_ref);
    g20 = g2(sys, t_ref, 0.0);
  }
  // scan one transient window plus a modulation period for extrema
  const double period = sys.modulated() ? kTwoPi / sys.omega_mod() : 1.0 / kappa;
  const int samples = 257;
  double s1_min = sq.s1, s2_min = sq.s2, q_min = q, q_max = q;
  for (int i = 0; i < samples; ++i) {
    const double t = (t_ref + period) * static_cast<double>(i) / (samples - 1);
    const MomentState mi = quadrature_variances(sys, t);
    s1_min = std::min(s1_min, 4.0 * mi.v1 - 1.0);
    s2_min = std::min(s2_min, 4.0 * mi.v2 - 1.0);
    if (mi.n > kVacuumGuard) {
      const double qi = (2.0 * mi.n * mi.n + mi.m_anom * mi.m_anom - mi.n * mi.n) / mi.n;
      if (std::isnan(q_min) || qi < q_min) q_min = qi;
      if (std::isnan(q_max) || qi > q_max) q_max = qi;
    }
  }
  return {eps, eta, kom, theta,
          {eps, eta, kom, theta, kappa * t_ref, b.n_opa, b.n_casimir, b.n_total, sq.s1,
           sq.s2, q, g20, s1_min, s2_min, q_min, q_max}};
}

void run_sweep(const RunConfig& rc) {
  struct Cell {
    double eps, eta, kom, theta;
  };
  std::vector<Cell> cells;
  for (double eps : rc.sweep_epsilon)
    for (double eta : rc.sweep_eta)
      for (double kom : rc.sweep_kappa_over_omega)
        for (double theta : rc.sweep_theta_s) cells.push_back({eps, eta, kom, theta});

  std::vector<SweepRow> rows(cells.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const int jobs = std::max(1, std::min<int>(rc.jobs, static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        rows[i] = sweep_cell(rc, cells[i].eps, cells[i].eta, cells[i].kom, cells[i].theta);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  Csv csv;
  provenance(csv, rc);
  csv.comment("grid_points = " + format_number(static_cast<double>(cells.size())));
  csv.header({"epsilon_over_kappa", "eta_over_kappa", "kappa_over_omega", "theta_s",
              "kappa_t_ref", "n_opa", "n_casimir", "n_total", "s1", "s2", "q", "g2_0",
              "s1_min", "s2_min", "q_min", "q_max"});
  for (const auto& row : rows) csv.row(row.values);
  emit(rc, csv);
}

}  // namespace

void run_command(const RunConfig& rc) {
  if (rc.subcommand == "photons") return run_photons(rc, false);
  if (rc.subcommand == "squeezing") return run_photons(rc, true);
  if (rc.subcommand == "g2") return run_g2(rc);
  if (rc.subcommand == "mandel") return run_mandel(rc);
  if (rc.subcommand == "spectrum") return run_spectrum(rc);
  if (rc.subcommand == "analogy") return run_analogy(rc);
  if (rc.subcommand == "verify") return run_verify(rc);
  if (rc.subcommand == "sweep") return run_sweep(rc);
  throw ValidationError("unknown subcommand '" + rc.subcommand + "'");
}

int main_entry(const std::vector<std::string>& args) {
  std::string output_path;
  try {
    const RunConfig rc = parse_config(args);
    output_path = rc.output;
    run_command(rc);
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!output_path.empty()) {
      std::error_code ec;
      std::filesystem::remove(output_path, ec);
    }
    return 2;
  } catch (const Error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    if (!output_path.empty()) {
      std::error_code ec;
      std::filesystem::remove(output_path, ec);
    }
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

int main_entry(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  if (args.empty()) {
    std::cerr << "usage: dceopa <photons|squeezing|g2|mandel|spectrum|analogy|verify|sweep>"
                 " [--flag value ...]\n";
    return 2;
  }
  return main_entry(args);
}

}  // namespace dceopa::cli
