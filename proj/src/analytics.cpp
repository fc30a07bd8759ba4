#include "dceopa/analytics.hpp"

#include <cmath>

#include "dceopa/special.hpp"

namespace dceopa {

namespace {

double checked_exp(double exponent) {
  if (std::abs(exponent) > kSafeExponent)
    throw ExponentOverflow("exponent outside the safe band +-700");
  return std::exp(exponent);
}

// Bounded building blocks at one time: the squared envelopes and the
// damping-weighted integrals w_i = kappa f_i^2 Int g_i^2.
struct EnvelopeSet {
  double f1sq = 1.0;
  double f2sq = 1.0;
  double w1 = 0.0;
  double w2 = 0.0;
};

EnvelopeSet evaluate_envelopes(const SystemConfig& c, double t) {
  const double s = c.modulated() ? std::sin(c.omega_mod() * t) : 0.0;
  const double zs = c.z() * s;
  EnvelopeSet e;
  e.f1sq = checked_exp(-c.gamma_minus() * t + zs);
  e.f2sq = checked_exp(-c.gamma_plus() * t - zs);
  e.w1 = damped_kappa_integral(IntegralKind::G1Squared, c, t);
  e.w2 = damped_kappa_integral(IntegralKind::G2Squared, c, t);
  return e;
}

MomentState moments_from(const EnvelopeSet& e, double t) {
  MomentState m;
  m.v1 = 0.25 * (e.f1sq + e.w1);
  m.v2 = 0.25 * (e.f2sq + e.w2);
  m.n = m.v1 + m.v2 - 0.5;
  m.m_anom = m.v1 - m.v2;
  m.t = t;
  return m;
}

void require_time(double t) {
  if (!(t >= 0.0)) throw ValidationError("time must be >= 0");
}

}  // namespace

MomentState quadrature_variances(const SystemConfig& config, double t) {
  require_time(t);
  return moments_from(evaluate_envelopes(config, t), t);
}

PhotonBreakdown photon_breakdown(const SystemConfig& config, double t) {
  require_time(t);
  const double gp = config.gamma_plus();
  const double gm = config.gamma_minus();
  const double eps = config.epsilon();
  const double kappa = config.kappa();
  const double z = config.z();
  const double egp = std::exp(-gp * t);
  const double egm = std::exp(-gm * t);

  PhotonBreakdown b;
  b.n_opa = 2.0 * eps * eps / (gp * gm) + 0.5 * eps / gp * egp - 0.5 * eps / gm * egm;

  const double bessel0 = bessel_I(0, z);
  b.n_eta = 0.25 * kappa * (bessel0 - 1.0) *
            (1.0 / gp + 1.0 / gm - egp / gp - egm / gm);

  const double s = config.modulated() ? std::sin(config.omega_mod() * t) : 0.0;
  const double ezs = checked_exp(z * s);
  const double emzs = checked_exp(-z * s);
  const double osc_minus = oscillation_sum(IntegralKind::G1Squared, config, t);
  const double osc_plus = oscillation_sum(IntegralKind::G2Squared, config, t);
  b.n_interference =
      0.25 * ((ezs - 1.0) * (egm + kappa * bessel0 / gm * (1.0 - egm)) +
              (emzs - 1.0) * (egp + kappa * bessel0 / gp * (1.0 - egp)) +
              kappa * (ezs * osc_minus + emzs * osc_plus));

  b.n_casimir = b.n_eta + b.n_interference;
  b.n_total = b.n_opa + b.n_casimir;

  // The decomposition must reproduce the direct variance route.
  const double direct = quadrature_variances(config, t).n;
  if (std::abs(b.n_total - direct) > 1e-9 * (1.0 + std::abs(direct)))
    throw NumericalError("photon-number decomposition disagrees with the direct total");
  return b;
}

SqueezingPair squeezing(const SystemConfig& config, double t) {
  const MomentState m = quadrature_variances(config, t);
  return {4.0 * m.v1 - 1.0, 4.0 * m.v2 - 1.0};
}

std::pair<double, double> casimir_variances(const SystemConfig& config, double t) {
  const MomentState full = quadrature_variances(config, t);
  const SystemConfig constant_pump = validate_config(
      PumpProfile{config.epsilon(), 0.0, 0.0}, config.cavity(), config.analogy());
  const MomentState base = quadrature_variances(constant_pump, t);
  return {full.v1 - base.v1, full.v2 - base.v2};
}

TwoTimeCorrelators two_time(const SystemConfig& config, double t, double tau) {
  require_time(t);
  if (!(tau >= 0.0)) throw ValidationError("delay must be >= 0");
  const MomentState m = quadrature_variances(config, t);
  // Ratio form of the correlators: with r1 = f1(t+tau)/f1(t) and
  // r2 = f2(t+tau)/f2(t),
  //   <a^dag(t) a(t+tau)>     = r1 (V1 - 1/4) + r2 (V2 - 1/4),
  //   <a^dag(t) a^dag(t+tau)> = r1 (V1 - 1/4) - r2 (V2 - 1/4),
  // where the hyperbolic term of the expanded form cancels against the vacuum
  // quarter. The second sign is the corrected one: the vacuum limit vanishes.
  double ds = 0.0;
  if (config.modulated())
    ds = std::sin(config.omega_mod() * (t + tau)) - std::sin(config.omega_mod() * t);
  const double et = config.eta_tilde();
  const double r1 = checked_exp(-0.5 * config.gamma_minus() * tau + et * ds);
  const double r2 = checked_exp(-0.5 * config.gamma_plus() * tau - et * ds);
  TwoTimeCorrelators c;
  c.c_normal = r1 * (m.v1 - 0.25) + r2 * (m.v2 - 0.25);
  c.c_anomalous = r1 * (m.v1 - 0.25) - r2 * (m.v2 - 0.25);
  c.t = t;
  c.tau = tau;
  return c;
}

double g2(const SystemConfig& config, double t, double tau) {
  const MomentState m = quadrature_variances(config, t);
  if (m.n <= kVacuumGuard)
    throw VacuumReference("g2 undefined: mean photon number at the reference time is ~0");
  const TwoTimeCorrelators c = two_time(config, t, tau);
  return 1.0 + (c.c_anomalous * c.c_anomalous + c.c_normal * c.c_normal) / (m.n * m.n);
}

double mandel_q(const SystemConfig& config, double t) {
  require_time(t);
  const EnvelopeSet e = evaluate_envelopes(config, t);
  const MomentState m = moments_from(e, t);
  if (m.n <= kVacuumGuard)
    throw VacuumReference("Mandel Q undefined: mean photon number is ~0");

  const double ekt = std::exp(-config.kappa() * t);
  const double a1 = (10.0 * ekt * ekt + 3.0 * (e.f1sq * e.f1sq + e.f2sq * e.f2sq) -
                     8.0 * ekt * (e.f1sq + e.f2sq)) / 16.0;
  const double a27 = 0.25 * (e.f1sq - e.f2sq);          // i = 2, 7
  const double a36 = 0.25 * (e.f1sq + e.f2sq - 2.0 * ekt);  // i = 3..6
  const double f2 = 0.25 * (e.w1 - e.w2);               // = F7
  const double f3 = 0.25 * (e.w1 + e.w2 - 2.0 * (1.0 - ekt));  // = F4 = F5 = F6
  const double f8 = f2 * f2 + 2.0 * f3 * f3;
  const double fourth_moment = a1 + 2.0 * a27 * f2 + 4.0 * a36 * f3 + f8;

  const double gaussian = 2.0 * m.n * m.n + m.m_anom * m.m_anom;
  if (std::abs(fourth_moment - gaussian) > 1e-8 * (1.0 + gaussian))
    throw NumericalError("<a^dag2 a^2> expansion violates the Gaussian moment identity");
  return (fourth_moment - m.n * m.n) / m.n;
}

double steady_reference_time(const SystemConfig& config) {
  return std::max(20.0 / config.gamma_minus(), 20.0 / config.kappa());
}

double aligned_reference_time(const SystemConfig& config, double theta_s) {
  const double ts = steady_reference_time(config);
  if (!config.modulated()) return ts;
  const double omega = config.omega_mod();
  double k = std::ceil((omega * ts - theta_s) / kTwoPi);
  double t = (theta_s + kTwoPi * k) / omega;
  if (t < ts) t += kTwoPi / omega;
  return t;
}

}  // namespace dceopa
