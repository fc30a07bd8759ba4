#pragma once

#include <string>
#include <vector>

#include "dceopa/analytics.hpp"
#include "dceopa/core.hpp"

namespace dceopa {

// Brute-force verifier: fixed-step RK4 on the second-moment ODEs
//   dV1/dt = (2 eps_p(t) - kappa) V1 + kappa/4,
//   dV2/dt = -(2 eps_p(t) + kappa) V2 + kappa/4,
// and on the regression ODEs for the two-time correlators. Shares nothing with
// the closed-form path beyond the parameter types.

struct IntegratorSettings {
  double step = 0.0;      // s; must satisfy step <= min(1/(50 kappa), 2pi/(50 Omega))
  double max_time = 0.0;  // s; kappa * max_time <= 1e4
};

struct OracleReport {
  double max_rel_error = 0.0;
  double worst_time = 0.0;
  std::string quantity;
};

// step = min(1/(100 kappa), 2pi/(100 Omega)).
IntegratorSettings default_integrator_settings(const SystemConfig& config, double max_time);

// Vacuum initial condition V1(0) = V2(0) = 1/4; returns states at the
// requested ascending grid times.
std::vector<MomentState> integrate_moments(const SystemConfig& config,
                                           const IntegratorSettings& settings,
                                           const std::vector<double>& grid);

// Regression ODEs in the delay:
//   dC/dtau = -(kappa/2) C + eps_p(t+tau) D,
//   dD/dtau = -(kappa/2) D + eps_p(t+tau) C,
// with C(0) = n(t), D(0) = m_anom(t) taken from this module's own moment
// integration (never from the closed forms).
std::vector<TwoTimeCorrelators> integrate_regression(const SystemConfig& config,
                                                     const IntegratorSettings& settings,
                                                     double t,
                                                     const std::vector<double>& tau_grid);

// Same, with explicit initial conditions (linearity checks, custom sources).
std::vector<TwoTimeCorrelators> integrate_regression_from(const SystemConfig& config,
                                                          const IntegratorSettings& settings,
                                                          double t, double c0, double d0,
                                                          const std::vector<double>& tau_grid);

// max over the grid of |a - b| / (1 + |b|), with the location of the worst
// point. When times is empty the worst index is reported instead.
OracleReport compare(const std::vector<double>& closed_series,
                     const std::vector<double>& oracle_series,
                     const std::vector<double>& times = {}, std::string quantity = {});

}  // namespace dceopa
