#include "dceopa/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace dceopa {

namespace {

constexpr double kMaxKappaTime = 1e4;

void check_settings(const SystemConfig& c, const IntegratorSettings& s) {
  if (!(s.step > 0.0)) throw StepTooLarge("integrator step must be positive");
  double bound = 1.0 / (50.0 * c.kappa());
  if (c.modulated()) bound = std::min(bound, kTwoPi / (50.0 * c.omega_mod()));
  if (s.step > bound * (1.0 + 1e-12))
    throw StepTooLarge("integrator step exceeds min(1/(50 kappa), 2pi/(50 Omega))");
  if (s.max_time * c.kappa() > kMaxKappaTime * (1.0 + 1e-12))
    throw ValidationError("integration horizon exceeds kappa*t = 1e4");
}

void check_grid(const std::vector<double>& grid, double max_time) {
  if (grid.empty()) throw ValidationError("empty time grid");
  if (!(grid.front() >= 0.0)) throw ValidationError("grid times must be >= 0");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw ValidationError("grid times must ascend");
  if (grid.back() > max_time * (1.0 + 1e-12))
    throw ValidationError("grid extends past the integrator horizon");
}

struct State2 {
  double a = 0.0;
  double b = 0.0;
};

// One classical RK4 step of a 2-state linear system with rhs supplied by the
// caller.
template <typename Rhs>
State2 rk4_step(const Rhs& rhs, double t, double h, State2 y) {
  const State2 k1 = rhs(t, y);
  const State2 k2 = rhs(t + 0.5 * h, {y.a + 0.5 * h * k1.a, y.b + 0.5 * h * k1.b});
  const State2 k3 = rhs(t + 0.5 * h, {y.a + 0.5 * h * k2.a, y.b + 0.5 * h * k2.b});
  const State2 k4 = rhs(t + h, {y.a + h * k3.a, y.b + h * k3.b});
  y.a += h / 6.0 * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a);
  y.b += h / 6.0 * (k1.b + 2.0 * k2.b + 2.0 * k3.b + k4.b);
  return y;
}

// Advances from t0 to t1 in ceil((t1-t0)/step) equal substeps so grid times
// are hit exactly.
template <typename Rhs>
State2 advance(const Rhs& rhs, double t0, double t1, double step, State2 y) {
  if (t1 <= t0) return y;
  const int nsub = static_cast<int>(std::ceil((t1 - t0) / step - 1e-12));
  const int n = std::max(1, nsub);
  const double h = (t1 - t0) / n;
  for (int i = 0; i < n; ++i) y = rk4_step(rhs, t0 + i * h, h, y);
  return y;
}

}  // namespace

IntegratorSettings default_integrator_settings(const SystemConfig& config, double max_time) {
  double step = 1.0 / (100.0 * config.kappa());
  if (config.modulated()) step = std::min(step, kTwoPi / (100.0 * config.omega_mod()));
  return {step, max_time};
}

std::vector<MomentState> integrate_moments(const SystemConfig& config,
                                           const IntegratorSettings& settings,
                                           const std::vector<double>& grid) {
  check_settings(config, settings);
  check_grid(grid, settings.max_time);
  const double kappa = config.kappa();
  auto rhs = [&](double t, State2 v) -> State2 {
    const double ep = pump_amplitude(config.pump(), t);
    return {(2.0 * ep - kappa) * v.a + 0.25 * kappa,
            -(2.0 * ep + kappa) * v.b + 0.25 * kappa};
  };
  std::vector<MomentState> out;
  out.reserve(grid.size());
  State2 v{0.25, 0.25};
  double t = 0.0;
  for (double tg : grid) {
    v = advance(rhs, t, tg, settings.step, v);
    t = tg;
    out.push_back({v.a, v.b, v.a + v.b - 0.5, v.a - v.b, tg});
  }
  return out;
}

std::vector<TwoTimeCorrelators> integrate_regression_from(const SystemConfig& config,
                                                          const IntegratorSettings& settings,
                                                          double t, double c0, double d0,
                                                          const std::vector<double>& tau_grid) {
  check_settings(config, settings);
  check_grid(tau_grid, settings.max_time);
  if (!(t >= 0.0)) throw ValidationError("reference time must be >= 0");
  if ((t + tau_grid.back()) * config.kappa() > kMaxKappaTime * (1.0 + 1e-12))
    throw ValidationError("regression horizon exceeds kappa*t = 1e4");
  const double kappa = config.kappa();
  auto rhs = [&](double tau, State2 y) -> State2 {
    const double ep = pump_amplitude(config.pump(), t + tau);
    return {-0.5 * kappa * y.a + ep * y.b, -0.5 * kappa * y.b + ep * y.a};
  };
  std::vector<TwoTimeCorrelators> out;
  out.reserve(tau_grid.size());
  State2 y{c0, d0};
  double tau = 0.0;
  for (double tg : tau_grid) {
    y = advance(rhs, tau, tg, settings.step, y);
    tau = tg;
    out.push_back({y.a, y.b, t, tg});
  }
  return out;
}

std::vector<TwoTimeCorrelators> integrate_regression(const SystemConfig& config,
                                                     const IntegratorSettings& settings,
                                                     double t,
                                                     const std::vector<double>& tau_grid) {
  IntegratorSettings moment_settings = settings;
  moment_settings.max_time = std::max(settings.max_time, t);
  const MomentState at_t = integrate_moments(config, moment_settings, {t}).front();
  return integrate_regression_from(config, settings, t, at_t.n, at_t.m_anom, tau_grid);
}

OracleReport compare(const std::vector<double>& closed_series,
                     const std::vector<double>& oracle_series,
                     const std::vector<double>& times, std::string quantity) {
  if (closed_series.size() != oracle_series.size())
    throw LengthMismatch("compared series differ in length");
  if (!times.empty() && times.size() != closed_series.size())
    throw LengthMismatch("time axis differs in length");
  OracleReport report;
  report.quantity = std::move(quantity);
  for (std::size_t i = 0; i < closed_series.size(); ++i) {
    const double rel = std::abs(closed_series[i] - oracle_series[i]) /
                       (1.0 + std::abs(oracle_series[i]));
    if (rel > report.max_rel_error) {
      report.max_rel_error = rel;
      report.worst_time = times.empty() ? static_cast<double>(i) : times[i];
    }
  }
  return report;
}

}  // namespace dceopa
