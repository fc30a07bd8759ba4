#pragma once

#include <optional>

#include "dceopa/errors.hpp"

namespace dceopa {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Harmonic pump law eps_p(t) = epsilon + eta*cos(omega_mod*t).
// All rates are angular frequencies (s^-1); the CLI converts from kappa/2pi inputs.
struct PumpProfile {
  double epsilon = 0.0;    // constant amplitude, s^-1
  double eta = 0.0;        // modulation amplitude, s^-1
  double omega_mod = 0.0;  // modulation frequency, s^-1

  // eta/omega_mod; defined as 0 for the unmodulated pump.
  double eta_tilde() const { return eta > 0.0 ? eta / omega_mod : 0.0; }
  // Modulation index 2*eta/omega_mod entering the Bessel expansions.
  double z() const { return 2.0 * eta_tilde(); }
};

struct CavityParams {
  double kappa = 0.0;  // energy decay rate, s^-1
};

// Equivalent moving-mirror picture: a pumped nonlinear crystal of length l and
// refractive index n inside a cavity of length L_cav acts like mirrors displaced
// periodically around the effective length L0 = L_cav + l*(n - 1).
struct AnalogyParams {
  double cavity_length = 0.0;   // m
  double crystal_length = 0.0;  // m
  double crystal_index = 1.0;   // dimensionless, >= 1

  double effective_length() const {
    return cavity_length + crystal_length * (crystal_index - 1.0);
  }
};

// Validated parameter set. Construction goes through validate_config, which
// enforces the below-threshold constraint kappa > 2*(epsilon + eta).
class SystemConfig {
public:
  const PumpProfile& pump() const { return pump_; }
  const CavityParams& cavity() const { return cavity_; }
  const std::optional<AnalogyParams>& analogy() const { return analogy_; }

  double kappa() const { return cavity_.kappa; }
  double epsilon() const { return pump_.epsilon; }
  double eta() const { return pump_.eta; }
  double omega_mod() const { return pump_.omega_mod; }
  double eta_tilde() const { return pump_.eta_tilde(); }
  double z() const { return pump_.z(); }

  // Relaxation rates of the two quadratures, kappa -+ 2*epsilon.
  double gamma_plus() const { return cavity_.kappa + 2.0 * pump_.epsilon; }
  double gamma_minus() const { return cavity_.kappa - 2.0 * pump_.epsilon; }

  bool modulated() const { return pump_.eta > 0.0; }

private:
  friend SystemConfig validate_config(const PumpProfile&, const CavityParams&,
                                      std::optional<AnalogyParams>);
  SystemConfig(PumpProfile p, CavityParams c, std::optional<AnalogyParams> a)
      : pump_(p), cavity_(c), analogy_(a) {}

  PumpProfile pump_;
  CavityParams cavity_;
  std::optional<AnalogyParams> analogy_;
};

// Checks field invariants and the strict below-threshold inequality.
// Throws NonPositiveRate or ThresholdViolation.
SystemConfig validate_config(const PumpProfile& pump, const CavityParams& cavity,
                             std::optional<AnalogyParams> analogy = std::nullopt);

// eps_p(t) = epsilon + eta*cos(omega_mod*t).
double pump_amplitude(const PumpProfile& pump, double t);

// Apparent mirror displacement 2*L0*(eta/omega_mod)*sin(omega_mod*t).
// Degenerate (eta == 0) modulation yields identically 0; callers can detect the
// case with modulation_is_degenerate.
double mirror_displacement(const AnalogyParams& analogy, const PumpProfile& pump, double t);
bool modulation_is_degenerate(const PumpProfile& pump);

// Peak effective mirror speed over c at the strongest allowed modulation,
// kappa*L0/c.
double max_mirror_speed_ratio(const AnalogyParams& analogy, const CavityParams& cavity);

}  // namespace dceopa
