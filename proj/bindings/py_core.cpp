#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dceopa/analytics.hpp"
#include "dceopa/core.hpp"
#include "dceopa/oracle.hpp"
#include "dceopa/special.hpp"
#include "dceopa/spectrum.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace dceopa;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Photon generation and quantum statistics of a damped cavity with a "
            "modulated-pump degenerate OPA";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<PumpProfile>(m, "PumpProfile")
      .def(py::init<double, double, double>(), "epsilon"_a, "eta"_a = 0.0,
           "omega_mod"_a = 0.0)
      .def_readwrite("epsilon", &PumpProfile::epsilon)
      .def_readwrite("eta", &PumpProfile::eta)
      .def_readwrite("omega_mod", &PumpProfile::omega_mod)
      .def_property_readonly("eta_tilde", &PumpProfile::eta_tilde)
      .def_property_readonly("z", &PumpProfile::z);

  py::class_<CavityParams>(m, "CavityParams")
      .def(py::init<double>(), "kappa"_a)
      .def_readwrite("kappa", &CavityParams::kappa);

  py::class_<AnalogyParams>(m, "AnalogyParams")
      .def(py::init<double, double, double>(), "cavity_length"_a, "crystal_length"_a,
           "crystal_index"_a)
      .def_readwrite("cavity_length", &AnalogyParams::cavity_length)
      .def_readwrite("crystal_length", &AnalogyParams::crystal_length)
      .def_readwrite("crystal_index", &AnalogyParams::crystal_index)
      .def_property_readonly("effective_length", &AnalogyParams::effective_length);

  py::class_<SystemConfig>(m, "SystemConfig")
      .def_property_readonly("kappa", &SystemConfig::kappa)
      .def_property_readonly("epsilon", &SystemConfig::epsilon)
      .def_property_readonly("eta", &SystemConfig::eta)
      .def_property_readonly("omega_mod", &SystemConfig::omega_mod)
      .def_property_readonly("eta_tilde", &SystemConfig::eta_tilde)
      .def_property_readonly("z", &SystemConfig::z)
      .def_property_readonly("gamma_plus", &SystemConfig::gamma_plus)
      .def_property_readonly("gamma_minus", &SystemConfig::gamma_minus)
      .def_property_readonly("modulated", &SystemConfig::modulated);

  m.def("validate_config", &validate_config, "pump"_a, "cavity"_a,
        "analogy"_a = std::nullopt);
  m.def("pump_amplitude", &pump_amplitude, "pump"_a, "t"_a);
  m.def("mirror_displacement", &mirror_displacement, "analogy"_a, "pump"_a, "t"_a);
  m.def("modulation_is_degenerate", &modulation_is_degenerate, "pump"_a);
  m.def("max_mirror_speed_ratio", &max_mirror_speed_ratio, "analogy"_a, "cavity"_a);

  py::enum_<EnvelopeKind>(m, "EnvelopeKind")
      .value("F1", EnvelopeKind::F1)
      .value("F2", EnvelopeKind::F2)
      .value("G1", EnvelopeKind::G1)
      .value("G2", EnvelopeKind::G2);
  py::enum_<IntegralKind>(m, "IntegralKind")
      .value("G1Squared", IntegralKind::G1Squared)
      .value("G2Squared", IntegralKind::G2Squared);
  py::enum_<IntegralMethod>(m, "IntegralMethod")
      .value("BesselSeries", IntegralMethod::BesselSeries)
      .value("AdaptiveQuadrature", IntegralMethod::AdaptiveQuadrature);

  py::class_<SeriesResult>(m, "SeriesResult")
      .def_readonly("value", &SeriesResult::value)
      .def_readonly("terms_used", &SeriesResult::terms_used)
      .def_readonly("truncation_estimate", &SeriesResult::truncation_estimate);

  m.def("bessel_i", &bessel_I, "order"_a, "x"_a);
  m.def("envelope", &envelope, "kind"_a, "config"_a, "t"_a);
  m.def("kappa_weighted_integral", &kappa_weighted_integral, "which"_a, "config"_a,
        "t"_a, "method"_a = IntegralMethod::BesselSeries);
  m.def("damped_kappa_integral", &damped_kappa_integral, "which"_a, "config"_a, "t"_a);

  py::class_<PhotonBreakdown>(m, "PhotonBreakdown")
      .def_readonly("n_opa", &PhotonBreakdown::n_opa)
      .def_readonly("n_eta", &PhotonBreakdown::n_eta)
      .def_readonly("n_interference", &PhotonBreakdown::n_interference)
      .def_readonly("n_casimir", &PhotonBreakdown::n_casimir)
      .def_readonly("n_total", &PhotonBreakdown::n_total);

  py::class_<MomentState>(m, "MomentState")
      .def_readonly("v1", &MomentState::v1)
      .def_readonly("v2", &MomentState::v2)
      .def_readonly("n", &MomentState::n)
      .def_readonly("m_anom", &MomentState::m_anom)
      .def_readonly("t", &MomentState::t);

  py::class_<TwoTimeCorrelators>(m, "TwoTimeCorrelators")
      .def_readonly("c_normal", &TwoTimeCorrelators::c_normal)
      .def_readonly("c_anomalous", &TwoTimeCorrelators::c_anomalous)
      .def_readonly("t", &TwoTimeCorrelators::t)
      .def_readonly("tau", &TwoTimeCorrelators::tau);

  py::class_<SqueezingPair>(m, "SqueezingPair")
      .def_readonly("s1", &SqueezingPair::s1)
      .def_readonly("s2", &SqueezingPair::s2);

  m.def("photon_breakdown", &photon_breakdown, "config"_a, "t"_a);
  m.def("quadrature_variances", &quadrature_variances, "config"_a, "t"_a);
  m.def("squeezing", &squeezing, "config"_a, "t"_a);
  m.def("casimir_variances", &casimir_variances, "config"_a, "t"_a);
  m.def("two_time", &two_time, "config"_a, "t"_a, "tau"_a);
  m.def("g2", &g2, "config"_a, "t"_a, "tau"_a);
  m.def("mandel_q", &mandel_q, "config"_a, "t"_a);
  m.def("steady_reference_time", &steady_reference_time, "config"_a);
  m.def("aligned_reference_time", &aligned_reference_time, "config"_a, "theta_s"_a);

  py::class_<IntegratorSettings>(m, "IntegratorSettings")
      .def(py::init<double, double>(), "step"_a, "max_time"_a)
      .def_readwrite("step", &IntegratorSettings::step)
      .def_readwrite("max_time", &IntegratorSettings::max_time);

  py::class_<OracleReport>(m, "OracleReport")
      .def_readonly("max_rel_error", &OracleReport::max_rel_error)
      .def_readonly("worst_time", &OracleReport::worst_time)
      .def_readonly("quantity", &OracleReport::quantity);

  m.def("default_integrator_settings", &default_integrator_settings, "config"_a,
        "max_time"_a);
  m.def("integrate_moments", &integrate_moments, "config"_a, "settings"_a, "grid"_a);
  m.def("integrate_regression", &integrate_regression, "config"_a, "settings"_a, "t"_a,
        "tau_grid"_a);
  m.def("integrate_regression_from", &integrate_regression_from, "config"_a,
        "settings"_a, "t"_a, "c0"_a, "d0"_a, "tau_grid"_a);
  m.def("compare", &compare, "closed_series"_a, "oracle_series"_a,
        "times"_a = std::vector<double>{}, "quantity"_a = std::string{});

  py::enum_<CorrelatorSource>(m, "CorrelatorSource")
      .value("ClosedForm", CorrelatorSource::ClosedForm)
      .value("OracleRegression", CorrelatorSource::OracleRegression);

  py::class_<SpectrumOptions>(m, "SpectrumOptions")
      .def(py::init<>())
      .def_readwrite("samples_per_period", &SpectrumOptions::samples_per_period)
      .def_readwrite("tail_scale", &SpectrumOptions::tail_scale)
      .def_readwrite("source", &SpectrumOptions::source);

  py::class_<SpectrumSeries>(m, "SpectrumSeries")
      .def_readonly("omegas", &SpectrumSeries::omegas)
      .def_readonly("values", &SpectrumSeries::values)
      .def_readonly("t_s", &SpectrumSeries::t_s)
      .def_readonly("theta_s", &SpectrumSeries::theta_s)
      .def_readonly("normalized", &SpectrumSeries::normalized)
      .def_readonly("reference_omega", &SpectrumSeries::reference_omega);

  m.def("intracavity_spectrum", &intracavity_spectrum, "config"_a, "t_s"_a, "omegas"_a,
        "options"_a = SpectrumOptions{});
  m.def("normalize", &normalize, "series"_a, "reference_omega"_a);
  m.def("output_spectrum", &output_spectrum, "series"_a, "cavity"_a);

  m.attr("SPEED_OF_LIGHT") = kSpeedOfLight;
  m.attr("__version__") = "0.1.0";
}
