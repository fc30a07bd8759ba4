#include <cmath>
#include <vector>

#include "doctest.h"
#include "dceopa/analytics.hpp"
#include "dceopa/spectrum.hpp"
#include "helpers.hpp"

using namespace dceopa;
using dceopa::testing::make_config;

namespace {

std::vector<double> grid_units(double unit, double span, int n) {
  std::vector<double> g(2 * n + 1);
  for (int i = -n; i <= n; ++i) g[i + n] = span * i / n * unit;
  return g;
}

}  // namespace

TEST_CASE("constant-pump spectrum: even, single-peaked, bi-Lorentzian") {
  const SystemConfig c = make_config(0.3, 0.0, 0.0);
  const double ts = steady_reference_time(c);
  const auto om = grid_units(c.kappa(), 1.2, 48);
  const SpectrumSeries s = intracavity_spectrum(c, ts, om);
  const std::size_t mid = om.size() / 2;

  // parity
  for (std::size_t i = 0; i < om.size(); ++i)
    CHECK(std::abs(s.values[i] - s.values[om.size() - 1 - i]) / s.values[mid] < 1e-8);
  // positive and single-peaked
  for (std::size_t i = mid; i + 1 < om.size(); ++i) {
    CHECK(s.values[i] > 0.0);
    CHECK(s.values[i + 1] < s.values[i]);
  }
  // analytic transform of the bi-exponential correlator
  const MomentState m = quadrature_variances(c, ts);
  const double l1 = 0.5 * c.gamma_minus(), l2 = 0.5 * c.gamma_plus();
  for (std::size_t i = 0; i < om.size(); ++i) {
    const double w = om[i];
    const double analytic = ((m.v1 - 0.25) * l1 / (l1 * l1 + w * w) +
                             (m.v2 - 0.25) * l2 / (l2 * l2 + w * w)) / kPi;
    CHECK(std::abs(s.values[i] - analytic) / analytic < 1e-5);
  }
}

TEST_CASE("peak narrows and rises with stronger pump") {
  auto half_width = [](const SystemConfig& c) {
    const double ts = steady_reference_time(c);
    const auto om = grid_units(c.kappa(), 1.2, 240);
    const SpectrumSeries s = intracavity_spectrum(c, ts, om);
    const std::size_t mid = om.size() / 2;
    const double half = 0.5 * s.values[mid];
    for (std::size_t i = mid; i + 1 < om.size(); ++i)
      if (s.values[i + 1] < half) {
        const double w0 = om[i], w1 = om[i + 1];
        const double y0 = s.values[i], y1 = s.values[i + 1];
        return (w0 + (half - y0) / (y1 - y0) * (w1 - w0)) / c.kappa();
      }
    return 1e300;
  };
  const SystemConfig weak = make_config(0.2, 0.0, 0.0);
  const SystemConfig strong = make_config(0.4, 0.0, 0.0);
  CHECK(half_width(strong) < half_width(weak));
  const double peak_weak =
      intracavity_spectrum(weak, steady_reference_time(weak), {0.0}).values[0];
  const double peak_strong =
      intracavity_spectrum(strong, steady_reference_time(strong), {0.0}).values[0];
  CHECK(peak_strong > peak_weak);
}

TEST_CASE("modulated spectrum grows symmetric side peaks spaced by Omega") {
  const SystemConfig c = make_config(0.35, 0.1, 0.5);
  for (double theta : {kPi / 4, kPi / 2}) {
    const double ts = aligned_reference_time(c, theta);
    const int n = 120;
    const auto om = grid_units(c.omega_mod(), 3.0, n);
    const double step = 3.0 / n;
    const SpectrumSeries s = intracavity_spectrum(c, ts, om);
    std::vector<double> peak_pos;
    for (std::size_t i = 1; i + 1 < om.size(); ++i)
      if (s.values[i] > s.values[i - 1] && s.values[i] > s.values[i + 1])
        peak_pos.push_back(om[i] / c.omega_mod());
    bool plus = false, minus = false;
    for (double p : peak_pos) {
      if (std::abs(p - 1.0) <= step + 1e-12) plus = true;
      if (std::abs(p + 1.0) <= step + 1e-12) minus = true;
    }
    CHECK(plus);
    CHECK(minus);
  }
}

TEST_CASE("refinement and tail-extension stability") {
  const SystemConfig c = make_config(0.35, 0.1, 0.5);
  const double ts = aligned_reference_time(c, kPi / 4);
  const auto om = grid_units(c.omega_mod(), 1.2, 24);
  const SpectrumSeries base = intracavity_spectrum(c, ts, om);
  SpectrumOptions fine;
  fine.samples_per_period = 320.0;
  SpectrumOptions longer;
  longer.tail_scale = 1.5;
  const SpectrumSeries s_fine = intracavity_spectrum(c, ts, om, fine);
  const SpectrumSeries s_tail = intracavity_spectrum(c, ts, om, longer);
  for (std::size_t i = 0; i < om.size(); ++i) {
    CHECK(std::abs(s_fine.values[i] - base.values[i]) < 1e-6 * std::abs(base.values[i]));
    CHECK(std::abs(s_tail.values[i] - base.values[i]) < 1e-6 * std::abs(base.values[i]));
  }
}

TEST_CASE("oracle-backed correlator reproduces the closed-form spectrum") {
  const SystemConfig c = make_config(0.1, 0.3, 4.0);
  const double ts = aligned_reference_time(c, kPi / 2);
  const auto om = grid_units(c.omega_mod(), 2.0, 20);
  const SpectrumSeries closed = intracavity_spectrum(c, ts, om);
  SpectrumOptions opt;
  opt.source = CorrelatorSource::OracleRegression;
  const SpectrumSeries oracle = intracavity_spectrum(c, ts, om, opt);
  for (std::size_t i = 0; i < om.size(); ++i)
    CHECK(std::abs(closed.values[i] - oracle.values[i]) /
              (1e-3 + std::abs(closed.values[i])) < 1e-6);
}

TEST_CASE("normalize") {
  const SystemConfig c = make_config(0.3, 0.0, 0.0);
  const double ts = steady_reference_time(c);
  const auto om = grid_units(c.kappa(), 1.0, 20);
  const SpectrumSeries s = intracavity_spectrum(c, ts, om);

  const double ref = 0.3 * c.kappa();  // on-grid reference
  const SpectrumSeries n1 = normalize(s, ref);
  CHECK(n1.normalized);
  CHECK(n1.reference_omega == ref);
  const std::size_t idx = 26;  // -1.0 + 26/20 = +0.3 in kappa units
  CHECK(om[idx] == doctest::Approx(ref));
  CHECK(n1.values[idx] == doctest::Approx(1.0).epsilon(1e-9));

  // idempotent for the same reference
  const SpectrumSeries n2 = normalize(n1, ref);
  for (std::size_t i = 0; i < om.size(); ++i)
    CHECK(n2.values[i] == doctest::Approx(n1.values[i]).epsilon(1e-12));

  // off-grid reference: the interpolated value of the scaled series is 1
  const SpectrumSeries n3 = normalize(s, 0.325 * c.kappa());
  const double back = (n3.values[26] + n3.values[27]) * 0.5;
  CHECK(back == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(normalize(s, 100.0 * c.kappa()), ValidationError);
  SpectrumSeries zeros = s;
  for (double& v : zeros.values) v = 0.0;
  CHECK_THROWS_AS(normalize(zeros, 0.0), ZeroReference);
}

TEST_CASE("output spectrum is kappa times the intracavity one") {
  const SystemConfig c = make_config(0.3, 0.0, 0.0);
  const double ts = steady_reference_time(c);
  const auto om = grid_units(c.kappa(), 1.0, 10);
  const SpectrumSeries s = intracavity_spectrum(c, ts, om);
  const SpectrumSeries out = output_spectrum(s, c.cavity());
  for (std::size_t i = 0; i < om.size(); ++i)
    CHECK(out.values[i] == c.kappa() * s.values[i]);
  // doubling kappa doubles the proportionality constant for the same series
  const SpectrumSeries out2 = output_spectrum(s, CavityParams{2.0 * c.kappa()});
  for (std::size_t i = 0; i < om.size(); ++i)
    CHECK(out2.values[i] == doctest::Approx(2.0 * out.values[i]));
  CHECK_THROWS_AS(output_spectrum(normalize(s, 0.0), c.cavity()), AlreadyNormalized);
}

TEST_CASE("spectrum preconditions") {
  const SystemConfig c = make_config(0.3, 0.1, 2.0);
  const auto om = grid_units(c.omega_mod(), 1.0, 5);
  CHECK_THROWS_AS(intracavity_spectrum(c, 1.0 / c.kappa(), om), NotQuasiSteady);
  SpectrumOptions coarse;
  coarse.samples_per_period = 20.0;
  CHECK_THROWS_AS(intracavity_spectrum(c, steady_reference_time(c), om, coarse),
                  ValidationError);
  CHECK_THROWS_AS(
      intracavity_spectrum(c, steady_reference_time(c), {1e9 * c.kappa()}),
      ResolutionTooCoarse);
}
