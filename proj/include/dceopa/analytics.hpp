#pragma once

#include <utility>

#include "dceopa/core.hpp"

namespace dceopa {

// Mean photon number at one time, split into the constant-pump part, the
// modulation part and the interference part carried by the counter-rotating
// terms. n_casimir = n_eta + n_interference, n_total = n_opa + n_casimir,
// both stored as constructed sums.
struct PhotonBreakdown {
  double n_opa = 0.0;
  double n_eta = 0.0;
  double n_interference = 0.0;
  double n_casimir = 0.0;
  double n_total = 0.0;
};

// Gaussian single-time state. Identities n = v1 + v2 - 1/2 and
// m_anom = v1 - v2 hold by construction (the anomalous moment <a^2> is real
// for this model).
struct MomentState {
  double v1 = 0.25;
  double v2 = 0.25;
  double n = 0.0;
  double m_anom = 0.0;
  double t = 0.0;
};

struct TwoTimeCorrelators {
  double c_normal = 0.0;     // <a^dag(t) a(t+tau)>
  double c_anomalous = 0.0;  // <a^dag(t) a^dag(t+tau)>
  double t = 0.0;
  double tau = 0.0;
};

// S_i = 4*(Delta a_i)^2 - 1; squeezing present in component i iff s_i < 0.
struct SqueezingPair {
  double s1 = 0.0;
  double s2 = 0.0;
};

inline constexpr double kVacuumGuard = 1e-12;

PhotonBreakdown photon_breakdown(const SystemConfig& config, double t);

MomentState quadrature_variances(const SystemConfig& config, double t);

SqueezingPair squeezing(const SystemConfig& config, double t);

// Per-quadrature variance of the Casimir part: the full-config variance minus
// the variance of the eta = 0 config with the same epsilon and kappa.
std::pair<double, double> casimir_variances(const SystemConfig& config, double t);

TwoTimeCorrelators two_time(const SystemConfig& config, double t, double tau);

// Normalized intensity autocorrelation g2(tau) referenced at time t.
// Throws VacuumReference when n(t) <= kVacuumGuard.
double g2(const SystemConfig& config, double t, double tau);

// Mandel Q at time t, from the envelope expansion of <a^dag2 a^2>,
// cross-checked against the zero-mean Gaussian identity 2n^2 + m^2.
double mandel_q(const SystemConfig& config, double t);

// Operational quasi-steady reference time max(20/gamma_minus, 20/kappa).
double steady_reference_time(const SystemConfig& config);

// Smallest t >= steady_reference_time with omega_mod*t == theta_s (mod 2pi).
// Unmodulated configs return steady_reference_time unchanged.
double aligned_reference_time(const SystemConfig& config, double theta_s);

}  // namespace dceopa
