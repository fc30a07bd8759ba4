#include "dceopa/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "dceopa/analytics.hpp"
#include "dceopa/oracle.hpp"

namespace dceopa {

namespace {

constexpr long kMaxSamples = 40'000'000;

double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (x < xs.front() || x > xs.back())
    throw ValidationError("reference frequency outside the sampled band");
  const auto it = std::lower_bound(xs.begin(), xs.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
  if (hi == 0 || xs[hi] == x) return ys[hi];
  const std::size_t lo = hi - 1;
  const double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return (1.0 - w) * ys[lo] + w * ys[hi];
}

}  // namespace

SpectrumSeries intracavity_spectrum(const SystemConfig& config, double t_s,
                                    const std::vector<double>& omegas,
                                    const SpectrumOptions& options) {
  if (omegas.empty()) throw ValidationError("empty frequency grid");
  for (double w : omegas)
    if (!std::isfinite(w)) throw ValidationError("non-finite frequency requested");
  if (!std::is_sorted(omegas.begin(), omegas.end()))
    throw ValidationError("frequency grid must ascend");
  if (!(options.samples_per_period >= 40.0))
    throw ValidationError("sampling rule requires >= 40 samples per period");
  const double gm = config.gamma_minus();
  if (t_s < 20.0 / gm)
    throw NotQuasiSteady("spectrum reference time below 20/gamma_minus");

  // Truncate where the slow correlator envelope has decayed to 1e-8.
  const double tau_max = options.tail_scale * 2.0 / gm * std::log(1e8);
  double omega_fast = config.gamma_plus();
  if (config.modulated()) omega_fast = std::max(omega_fast, config.omega_mod());
  for (double w : omegas) omega_fast = std::max(omega_fast, std::abs(w));
  const double target_dtau = kTwoPi / (omega_fast * options.samples_per_period);
  long n = static_cast<long>(std::ceil(tau_max / target_dtau));
  n += n % 2;  // Simpson needs an even interval count
  n = std::max<long>(n, 8);
  if (n > kMaxSamples)
    throw ResolutionTooCoarse("spectrum sampling rule needs too many points");
  const double h = tau_max / static_cast<double>(n);

  // One shared correlator table; Simpson per requested omega.
  std::vector<double> corr(static_cast<std::size_t>(n) + 1);
  if (options.source == CorrelatorSource::ClosedForm) {
    const MomentState m = quadrature_variances(config, t_s);
    const double a = m.v1 - 0.25;
    const double b = m.v2 - 0.25;
    const double et = config.eta_tilde();
    const double omega_mod = config.omega_mod();
    const double sin_ts = config.modulated() ? std::sin(omega_mod * t_s) : 0.0;
    for (long k = 0; k <= n; ++k) {
      const double tau = k * h;
      const double ds =
          config.modulated() ? std::sin(omega_mod * (t_s + tau)) - sin_ts : 0.0;
      corr[k] = std::exp(-0.5 * config.gamma_minus() * tau + et * ds) * a +
                std::exp(-0.5 * config.gamma_plus() * tau - et * ds) * b;
    }
  } else {
    std::vector<double> taus(corr.size());
    for (long k = 0; k <= n; ++k) taus[k] = k * h;
    const IntegratorSettings settings =
        default_integrator_settings(config, t_s + tau_max);
    const auto reg = integrate_regression(config, settings, t_s, taus);
    for (std::size_t k = 0; k < corr.size(); ++k) corr[k] = reg[k].c_normal;
  }

  SpectrumSeries out;
  out.omegas = omegas;
  out.values.resize(omegas.size());
  out.t_s = t_s;
  out.theta_s = config.modulated() ? config.omega_mod() * t_s : 0.0;
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    const double w = omegas[i];
    double sum = corr[0] + corr[n] * std::cos(w * tau_max);
    for (long k = 1; k < n; ++k)
      sum += (k % 2 ? 4.0 : 2.0) * corr[k] * std::cos(w * (k * h));
    out.values[i] = sum * h / 3.0 / kPi;
  }
  return out;
}

SpectrumSeries normalize(const SpectrumSeries& series, double reference_omega) {
  const double ref = interpolate(series.omegas, series.values, reference_omega);
  if (!(ref > 0.0)) throw ZeroReference("spectrum value at the reference frequency is not positive");
  SpectrumSeries out = series;
  for (double& v : out.values) v /= ref;
  out.normalized = true;
  out.reference_omega = reference_omega;
  return out;
}

SpectrumSeries output_spectrum(const SpectrumSeries& series, const CavityParams& cavity) {
  if (series.normalized)
    throw AlreadyNormalized("output spectrum requires an unnormalized series");
  SpectrumSeries out = series;
  for (double& v : out.values) v *= cavity.kappa;
  return out;
}

}  // namespace dceopa
