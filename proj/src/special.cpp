#include "dceopa/special.hpp"

#include <cmath>
#include <limits>

namespace dceopa {

namespace {

double checked_exp(double exponent) {
  if (std::abs(exponent) > kSafeExponent)
    throw ExponentOverflow("exponent outside the safe band +-700");
  return std::exp(exponent);
}

struct IntegralSpec {
  double gamma;  // relaxation rate of this branch
  int sigma;     // sign of the z*sin term in the integrand exponent
};

IntegralSpec spec_for(IntegralKind which, const SystemConfig& c) {
  // g1^2 = exp(gamma_minus t - z sin), g2^2 = exp(gamma_plus t + z sin)
  if (which == IntegralKind::G1Squared) return {c.gamma_minus(), -1};
  return {c.gamma_plus(), +1};
}

// exp(-gamma t) * Int_0^t e^{gamma s} cos(w s) ds; bounded for all t >= 0.
double damped_exp_cos(double gamma, double w, double t, double exp_neg) {
  return (gamma * std::cos(w * t) + w * std::sin(w * t) - gamma * exp_neg) /
         (gamma * gamma + w * w);
}

// exp(-gamma t) * Int_0^t e^{gamma s} sin(w s) ds.
double damped_exp_sin(double gamma, double w, double t, double exp_neg) {
  return (gamma * std::sin(w * t) + w * (exp_neg - std::cos(w * t))) /
         (gamma * gamma + w * w);
}

struct HarmonicSum {
  double value = 0.0;
  int terms_used = 0;
  double truncation_estimate = 0.0;
};

// Fourier-Bessel expansion of e^{sigma z sin(Om s)}:
//   I0(z) + 2 Sum_j (-1)^j I_{2j}(z) cos(2j Om s)
//         + 2 sigma Sum_j (-1)^j I_{2j+1}(z) sin((2j+1) Om s).
// Integrated term by term against e^{gamma s} and damped by e^{-gamma t}; the
// I0 piece is optionally excluded. Truncation: stop at the first harmonic m
// whose term and successor both fall below 1e-12 of the running sum.
HarmonicSum damped_series(double gamma, int sigma, double z, double omega, double t,
                          bool include_monotone) {
  HarmonicSum out;
  const double exp_neg = std::exp(-gamma * t);
  if (include_monotone) {
    out.value = bessel_I(0, z) * (-std::expm1(-gamma * t)) / gamma;
    out.terms_used = 1;
  }
  if (z == 0.0 || t == 0.0) return out;

  auto harmonic_term = [&](int m) {
    const double w = m * omega;
    const int j = m / 2;
    const double parity = (j % 2 == 0) ? 1.0 : -1.0;
    if (m % 2 == 0)
      return 2.0 * parity * bessel_I(m, z) * damped_exp_cos(gamma, w, t, exp_neg);
    return 2.0 * sigma * parity * bessel_I(m, z) * damped_exp_sin(gamma, w, t, exp_neg);
  };

  double next = harmonic_term(1);
  for (int m = 1; m <= kHarmonicOrderCap; ++m) {
    const double term = next;
    out.value += term;
    ++out.terms_used;
    next = harmonic_term(m + 1);
    const double threshold = 1e-12 * std::abs(out.value);
    if (std::abs(term) <= threshold && std::abs(next) <= threshold) {
      out.truncation_estimate = std::abs(next);
      return out;
    }
  }
  throw SeriesDivergence("harmonic expansion did not converge within the order cap");
}

double integrand_exponent(const IntegralSpec& s, const SystemConfig& c, double x) {
  return s.gamma * x + s.sigma * c.z() * std::sin(c.omega_mod() * x);
}

struct QuadState {
  long evals = 0;
  double err = 0.0;
};

double adaptive_simpson(const SystemConfig& c, const IntegralSpec& s, double a, double b,
                        double fa, double fm, double fb, double whole, double tol, int depth,
                        QuadState& state) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = checked_exp(integrand_exponent(s, c, lm));
  const double frm = checked_exp(integrand_exponent(s, c, rm));
  state.evals += 2;
  const double h = b - a;
  const double left = h / 12.0 * (fa + 4.0 * flm + fm);
  const double right = h / 12.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  // the delta/15 error model only holds once the panel is reasonably resolved
  if (depth >= 40 || (depth >= 4 && std::abs(delta) <= 15.0 * tol)) {
    state.err += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(c, s, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, state) +
         adaptive_simpson(c, s, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, state);
}

SeriesResult quadrature_integral(const SystemConfig& c, const IntegralSpec& s, double t) {
  if (t == 0.0) return {0.0, 0, 0.0};
  QuadState state;
  const double fa = checked_exp(integrand_exponent(s, c, 0.0));
  const double fm = checked_exp(integrand_exponent(s, c, 0.5 * t));
  const double fb = checked_exp(integrand_exponent(s, c, t));
  state.evals = 3;
  const double whole = t / 6.0 * (fa + 4.0 * fm + fb);
  // 1e-12 absolute, floored relative to the coarse estimate so that large
  // integrals stay reachable in double precision.
  const double tol = 1e-12 * std::max(1.0, std::abs(whole));
  const double value =
      adaptive_simpson(c, s, 0.0, t, fa, fm, fb, whole, tol, 0, state) * c.kappa();
  return {value, static_cast<int>(state.evals), state.err * c.kappa()};
}

}  // namespace

double bessel_I(int order, double x) {
  if (order < 0 || order > kBesselOrderCap)
    throw OrderTooLarge("Bessel order outside [0, 250]");
  if (!(x >= 0.0)) throw ValidationError("bessel_I argument must be >= 0");
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  const double half = 0.5 * x;
  double term = 1.0;
  for (int k = 1; k <= order; ++k) term *= half / static_cast<double>(k);
  double sum = term;
  const double q = half * half;
  for (int k = 1; k < 2000; ++k) {
    term *= q / (static_cast<double>(k) * (order + k));
    sum += term;
    if (term < sum * 1e-17) break;
  }
  if (!std::isfinite(sum)) throw ExponentOverflow("bessel_I overflow");
  return sum;
}

double envelope(EnvelopeKind kind, const SystemConfig& config, double t) {
  if (!(t >= 0.0)) throw ValidationError("envelope requires t >= 0");
  const double s = config.modulated() ? std::sin(config.omega_mod() * t) : 0.0;
  const double et = config.eta_tilde();
  double exponent = 0.0;
  switch (kind) {
    case EnvelopeKind::F1: exponent = (config.epsilon() - 0.5 * config.kappa()) * t + et * s; break;
    case EnvelopeKind::G1: exponent = -((config.epsilon() - 0.5 * config.kappa()) * t + et * s); break;
    case EnvelopeKind::F2: exponent = -(config.epsilon() + 0.5 * config.kappa()) * t - et * s; break;
    case EnvelopeKind::G2: exponent = (config.epsilon() + 0.5 * config.kappa()) * t + et * s; break;
  }
  return checked_exp(exponent);
}

SeriesResult kappa_weighted_integral(IntegralKind which, const SystemConfig& config, double t,
                                     IntegralMethod method) {
  if (!(t >= 0.0)) throw ValidationError("integral requires t >= 0");
  const IntegralSpec s = spec_for(which, config);
  if (method == IntegralMethod::AdaptiveQuadrature) return quadrature_integral(config, s, t);
  if (t == 0.0) return {0.0, 0, 0.0};
  const HarmonicSum d =
      damped_series(s.gamma, s.sigma, config.z(), config.omega_mod(), t, true);
  const double growth = config.kappa() * checked_exp(s.gamma * t);
  return {growth * d.value, d.terms_used, growth * d.truncation_estimate};
}

double damped_kappa_integral(IntegralKind which, const SystemConfig& config, double t) {
  if (!(t >= 0.0)) throw ValidationError("integral requires t >= 0");
  if (t == 0.0) return 0.0;
  const IntegralSpec s = spec_for(which, config);
  const HarmonicSum d =
      damped_series(s.gamma, s.sigma, config.z(), config.omega_mod(), t, true);
  // f_i^2 = exp(-gamma t - sigma z sin); the e^{-gamma t} factor is already in
  // the damped series.
  const double sin_t = config.modulated() ? std::sin(config.omega_mod() * t) : 0.0;
  const double pref = checked_exp(-s.sigma * config.z() * sin_t);
  return config.kappa() * pref * d.value;
}

double oscillation_sum(IntegralKind which, const SystemConfig& config, double t) {
  if (!(t >= 0.0)) throw ValidationError("integral requires t >= 0");
  const IntegralSpec s = spec_for(which, config);
  return damped_series(s.gamma, s.sigma, config.z(), config.omega_mod(), t, false).value;
}

}  // namespace dceopa
