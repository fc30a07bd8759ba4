#include "dceopa/core.hpp"

#include <cmath>

namespace dceopa {

SystemConfig validate_config(const PumpProfile& pump, const CavityParams& cavity,
                             std::optional<AnalogyParams> analogy) {
  if (!(cavity.kappa > 0.0)) throw NonPositiveRate("kappa must be positive");
  if (!(pump.epsilon >= 0.0)) throw ValidationError("epsilon must be non-negative");
  if (!(pump.eta >= 0.0)) throw ValidationError("eta must be non-negative");
  if (pump.eta > 0.0 && !(pump.omega_mod > 0.0))
    throw NonPositiveRate("omega_mod must be positive when eta > 0");
  if (!(cavity.kappa > 2.0 * (pump.epsilon + pump.eta)))
    throw ThresholdViolation("below-threshold constraint kappa > 2(epsilon + eta) violated");
  if (analogy) {
    if (!(analogy->cavity_length > 0.0) || !(analogy->crystal_length > 0.0))
      throw ValidationError("analogy lengths must be positive");
    if (!(analogy->crystal_index >= 1.0))
      throw ValidationError("crystal index must be >= 1");
  }
  return SystemConfig(pump, cavity, analogy);
}

double pump_amplitude(const PumpProfile& pump, double t) {
  if (pump.eta == 0.0) return pump.epsilon;
  return pump.epsilon + pump.eta * std::cos(pump.omega_mod * t);
}

bool modulation_is_degenerate(const PumpProfile& pump) { return pump.eta == 0.0; }

double mirror_displacement(const AnalogyParams& analogy, const PumpProfile& pump, double t) {
  if (modulation_is_degenerate(pump)) return 0.0;
  return 2.0 * analogy.effective_length() * pump.eta_tilde() * std::sin(pump.omega_mod * t);
}

double max_mirror_speed_ratio(const AnalogyParams& analogy, const CavityParams& cavity) {
  return cavity.kappa * analogy.effective_length() / kSpeedOfLight;
}

}  // namespace dceopa
