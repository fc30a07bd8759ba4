#pragma once

#include <random>

#include "dceopa/core.hpp"

namespace dceopa::testing {

// Ratio-style constructor mirroring the figure parameterizations; kappa/2pi
// defaults to 1e4 Hz.
inline SystemConfig make_config(double eps_over_kappa, double eta_over_kappa,
                                double kappa_over_omega, double kappa = kTwoPi * 1e4) {
  const double omega = eta_over_kappa > 0.0 ? kappa / kappa_over_omega : 0.0;
  return validate_config(
      PumpProfile{eps_over_kappa * kappa, eta_over_kappa * kappa, omega},
      CavityParams{kappa});
}

// Uniform random below-threshold config in the acceptance ranges.
inline SystemConfig random_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ue(0.0, 0.4), uh(0.0, 0.3), uo(0.25, 8.0);
  for (;;) {
    const double eps = ue(rng), eta = uh(rng), kom = uo(rng);
    if (1.0 > 2.0 * (eps + eta)) return make_config(eps, eta, kom);
  }
}

}  // namespace dceopa::testing
