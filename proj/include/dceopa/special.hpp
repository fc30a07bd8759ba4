#pragma once

#include "dceopa/core.hpp"

namespace dceopa {

// Solution envelopes of the quadrature Langevin equations:
//   f1 = exp((eps - k/2)t + eta_tilde*sin(Om t)),   g1 = 1/f1,
//   f2 = exp(-(eps + k/2)t - eta_tilde*sin(Om t)),  g2 = 1/f2.
enum class EnvelopeKind { F1, F2, G1, G2 };

enum class IntegralKind { G1Squared, G2Squared };
enum class IntegralMethod { BesselSeries, AdaptiveQuadrature };

struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  // Bounds the magnitude of the first omitted term (series) or the accumulated
  // local error estimate (quadrature).
  double truncation_estimate = 0.0;
};

inline constexpr int kBesselOrderCap = 250;
inline constexpr int kHarmonicOrderCap = 200;
inline constexpr double kSafeExponent = 700.0;

// Modified Bessel function of the first kind, I_order(x), x >= 0, by the
// ascending power series. Relative accuracy ~1e-14 (all terms positive).
double bessel_I(int order, double x);

// Envelope value at time t >= 0. Throws ExponentOverflow when the exponent
// magnitude exceeds kSafeExponent.
double envelope(EnvelopeKind kind, const SystemConfig& config, double t);

// kappa * Int_0^t g_i^2(t') dt'. BesselSeries evaluates the harmonic expansion
// of exp(gamma t' +- z sin(Om t')); AdaptiveQuadrature integrates the envelope
// directly. Grows like exp(gamma t); overflow raises ExponentOverflow.
SeriesResult kappa_weighted_integral(IntegralKind which, const SystemConfig& config, double t,
                                     IntegralMethod method = IntegralMethod::BesselSeries);

// kappa * f_i^2(t) * Int_0^t g_i^2(t') dt' -- the combination entering the
// quadrature variances. Bounded for all t >= 0, safe deep in the quasi-steady
// regime where the raw integral would overflow.
double damped_kappa_integral(IntegralKind which, const SystemConfig& config, double t);

// The m >= 1 harmonic part of exp(-gamma t) * Int_0^t e^{gamma t'} e^{sigma z sin}
// dt' (no I_0 term, no prefactors). This is the piece that carries the
// counter-rotating-term oscillations in the photon-number decomposition.
double oscillation_sum(IntegralKind which, const SystemConfig& config, double t);

}  // namespace dceopa
