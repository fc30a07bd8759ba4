#pragma once

#include <vector>

#include "dceopa/core.hpp"

namespace dceopa {

enum class CorrelatorSource { ClosedForm, OracleRegression };

struct SpectrumOptions {
  // Simpson samples per oscillation period of the fastest relevant rate
  // (requested omega, modulation frequency, gamma_plus). 40 is the floor; the
  // default leaves half-spacing refinement below 1e-6 relative off-peak.
  double samples_per_period = 160.0;
  // Multiplies the truncation delay tau_max = (2/gamma_minus) * ln(1e8).
  double tail_scale = 1.0;
  CorrelatorSource source = CorrelatorSource::ClosedForm;
};

struct SpectrumSeries {
  std::vector<double> omegas;  // angular frequencies, s^-1, ascending
  std::vector<double> values;  // spectral densities
  double t_s = 0.0;            // reference time, s
  double theta_s = 0.0;        // omega_mod * t_s
  bool normalized = false;
  double reference_omega = 0.0;  // set when normalized
};

// S(omega) = (1/pi) Re Int_0^inf dtau e^{i omega tau} <a^dag(t_s) a(t_s+tau)>,
// by composite Simpson on [0, tau_max]. Requires t_s >= 20/gamma_minus
// (NotQuasiSteady otherwise); ResolutionTooCoarse when the sampling rule would
// need an absurd number of points.
SpectrumSeries intracavity_spectrum(const SystemConfig& config, double t_s,
                                    const std::vector<double>& omegas,
                                    const SpectrumOptions& options = {});

// Divides by the value linearly interpolated at reference_omega.
// ZeroReference when that value is not positive.
SpectrumSeries normalize(const SpectrumSeries& series, double reference_omega);

// Emitted-field spectrum S_out = kappa * S, valid for unnormalized series only
// (AlreadyNormalized otherwise).
SpectrumSeries output_spectrum(const SpectrumSeries& series, const CavityParams& cavity);

}  // namespace dceopa
