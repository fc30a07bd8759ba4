#include <cmath>
#include <random>

#include "doctest.h"
#include "dceopa/core.hpp"
#include "helpers.hpp"

using namespace dceopa;
using dceopa::testing::make_config;

TEST_CASE("validate_config accepts figure-style parameters") {
  // kappa/2pi = 1e4 Hz, eps = 0.3 kappa, eta = 0.1 kappa, kappa/Omega = 2
  const SystemConfig c = make_config(0.3, 0.1, 2.0);
  CHECK(c.kappa() == doctest::Approx(kTwoPi * 1e4));
  CHECK(c.eta_tilde() == doctest::Approx(0.1 * 2.0));
  CHECK(c.z() == doctest::Approx(0.4));
  CHECK(c.gamma_plus() == doctest::Approx(1.6 * c.kappa()));
  CHECK(c.gamma_minus() == doctest::Approx(0.4 * c.kappa()));
}

TEST_CASE("validate_config rejects at-threshold and bad rates") {
  const double kappa = kTwoPi * 1e4;
  // boundary kappa = 2 eps is rejected (strict inequality)
  CHECK_THROWS_AS(validate_config(PumpProfile{0.5 * kappa, 0.0, 0.0}, CavityParams{kappa}),
                  ThresholdViolation);
  CHECK_THROWS_AS(validate_config(PumpProfile{0.45 * kappa, 0.1 * kappa, kappa},
                                  CavityParams{kappa}),
                  ThresholdViolation);
  // eta > 0 needs a positive modulation frequency
  CHECK_THROWS_AS(validate_config(PumpProfile{0.0, 0.1 * kappa, 0.0}, CavityParams{kappa}),
                  NonPositiveRate);
  CHECK_THROWS_AS(validate_config(PumpProfile{0.1, 0.0, 0.0}, CavityParams{0.0}),
                  NonPositiveRate);
  CHECK_THROWS_AS(validate_config(PumpProfile{-1.0, 0.0, 0.0}, CavityParams{kappa}),
                  ValidationError);
  // eps = 0 with eta > 0 is a legal pure-modulated pump
  CHECK_NOTHROW(validate_config(PumpProfile{0.0, 0.2 * kappa, kappa}, CavityParams{kappa}));
}

TEST_CASE("rate identities gamma+*gamma- and gamma+ + gamma-") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const SystemConfig c = dceopa::testing::random_config(rng);
    const double k = c.kappa(), e = c.epsilon();
    CHECK(c.gamma_plus() * c.gamma_minus() == doctest::Approx(k * k - 4 * e * e));
    CHECK(c.gamma_plus() + c.gamma_minus() == doctest::Approx(2 * k));
    CHECK(c.gamma_minus() > 2.0 * c.eta());
  }
}

TEST_CASE("pump_amplitude phases and periodicity") {
  const SystemConfig c = make_config(0.3, 0.1, 2.0);
  const PumpProfile& p = c.pump();
  const double om = c.omega_mod();
  CHECK(pump_amplitude(p, 0.0) == doctest::Approx(p.epsilon + p.eta));
  CHECK(pump_amplitude(p, 0.5 * kPi / om) == doctest::Approx(p.epsilon));
  CHECK(pump_amplitude(p, kPi / om) == doctest::Approx(p.epsilon - p.eta));
  const double period = kTwoPi / om;
  for (int i = 0; i < 50; ++i) {
    const double t = 0.21 * i / c.kappa();
    CHECK(pump_amplitude(p, t) == doctest::Approx(pump_amplitude(p, t + period)).epsilon(1e-9));
  }
}

TEST_CASE("mirror displacement amplitude and derivative") {
  const AnalogyParams an{0.01, 0.001, 2.2};
  CHECK(an.effective_length() == doctest::Approx(0.0112));

  const SystemConfig c = make_config(0.3, 0.1, 2.0);
  const PumpProfile& p = c.pump();
  const double om = c.omega_mod();
  CHECK(mirror_displacement(an, p, 0.0) == 0.0);
  const double peak = 2.0 * an.effective_length() * p.eta / om;
  CHECK(mirror_displacement(an, p, 0.5 * kPi / om) == doctest::Approx(peak));
  // derivative at t = 0 equals 2 L0 eta, by central differences
  const double h = 1e-6 / c.kappa();
  const double deriv =
      (mirror_displacement(an, p, 2 * h) - mirror_displacement(an, p, 0.0)) / (2 * h);
  CHECK(deriv ==
        doctest::Approx(2.0 * an.effective_length() * p.eta).epsilon(1e-6));

  // degenerate modulation: identically zero, flagged
  const PumpProfile constant{0.3 * c.kappa(), 0.0, 0.0};
  CHECK(modulation_is_degenerate(constant));
  CHECK(mirror_displacement(an, constant, 1.0) == 0.0);
  CHECK_FALSE(modulation_is_degenerate(p));
}

TEST_CASE("max mirror speed ratio") {
  // kappa ~ 1e6 1/s, L0 ~ 3 cm sits in the 1e-4..1e-2 band
  const double ratio = max_mirror_speed_ratio(AnalogyParams{0.03, 1e-3, 1.0},
                                              CavityParams{1e6});
  CHECK(ratio > 1e-4);
  CHECK(ratio < 1e-2);
  // kappa = 2pi*1e4, L0 = 1 cm
  const double r2 = max_mirror_speed_ratio(AnalogyParams{0.01, 1e-9, 1.0},
                                           CavityParams{kTwoPi * 1e4});
  CHECK(r2 == doctest::Approx(kTwoPi * 1e4 * 0.01 / 299792458.0));
  CHECK(r2 == doctest::Approx(2.1e-6).epsilon(0.01));
  // L0 -> 0 limit
  CHECK(max_mirror_speed_ratio(AnalogyParams{1e-12, 1e-12, 1.0}, CavityParams{1e6}) ==
        doctest::Approx(0.0));
}
