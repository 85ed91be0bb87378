#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entropic/binning.hpp"
#include "entropic/bounds.hpp"
#include "entropic/entropy.hpp"
#include "entropic/errors.hpp"
#include "entropic/scenarios.hpp"
#include "entropic/search.hpp"
#include "entropic/states.hpp"

namespace py = pybind11;
using namespace entropic;

namespace {

// keyword-friendly wrapper: python callers pass hbar, not a constants object
PhysicalConstants consts_of(double hbar) { return PhysicalConstants(hbar); }

// QuantumState lacks a default constructor (its first alternative has none),
// which rules out pybind11's generic variant caster; one overload per
// concrete state keeps the python-side signature unchanged.
template <typename State>
void def_state_overloads(py::module_& m) {
  m.def(
      "position_density",
      [](const State& s, double x) { return position_density(s, x); },
      py::arg("state"), py::arg("x"));
  m.def(
      "momentum_density",
      [](const State& s, double p, double hbar) {
        return momentum_density(s, p, consts_of(hbar));
      },
      py::arg("state"), py::arg("p"), py::arg("hbar") = 1.0);
  m.def(
      "interval_probability",
      [](const State& s, Space space, double lo, double hi, double hbar) {
        return interval_probability(s, space, lo, hi, consts_of(hbar));
      },
      py::arg("state"), py::arg("space"), py::arg("lo"), py::arg("hi"),
      py::arg("hbar") = 1.0);
  m.def(
      "bin_probabilities",
      [](const State& state, Space space, const BinSpec& spec, double hbar,
         double tail_eps) {
        return bin_probabilities(state, space, spec, consts_of(hbar),
                                 tail_eps);
      },
      py::arg("state"), py::arg("space"), py::arg("spec"),
      py::arg("hbar") = 1.0, py::arg("tail_eps") = 1e-12);
  m.def(
      "run_renyi_ur_check",
      [](const State& state, double dx, double dp, double alpha, double hbar) {
        return run_renyi_ur_check(state, dx, dp, alpha, consts_of(hbar));
      },
      py::arg("state"), py::arg("dx"), py::arg("dp"), py::arg("alpha"),
      py::arg("hbar") = 1.0);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "numerical checks of entropic uncertainty relations for binned "
      "position/momentum distributions";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NonconvergedQuadrature>(m, "NonconvergedQuadrature",
                                                 PyExc_RuntimeError);
  py::register_exception<GridTooSmall>(m, "GridTooSmall", PyExc_ValueError);
  py::register_exception<InvalidScenario>(m, "InvalidScenario",
                                          PyExc_RuntimeError);

  py::enum_<Space>(m, "Space")
      .value("position", Space::position)
      .value("momentum", Space::momentum);

  py::class_<GaussianState>(m, "GaussianState")
      .def(py::init<double, double, double>(), py::arg("x0"), py::arg("p0"),
           py::arg("sigma"))
      .def_property_readonly("x0", &GaussianState::x0)
      .def_property_readonly("p0", &GaussianState::p0)
      .def_property_readonly("sigma", &GaussianState::sigma);

  py::class_<BoxState>(m, "BoxState")
      .def(py::init<double>(), py::arg("half_width"))
      .def_property_readonly("half_width", &BoxState::half_width);

  py::class_<SampledState>(m, "SampledState")
      .def(py::init<double, double, std::vector<std::complex<double>>>(),
           py::arg("grid_start"), py::arg("spacing"), py::arg("amplitudes"))
      .def_static("normalized", &SampledState::normalized,
                  py::arg("grid_start"), py::arg("spacing"),
                  py::arg("amplitudes"))
      .def_property_readonly("size", &SampledState::size)
      .def_property_readonly("grid_start", &SampledState::grid_start)
      .def_property_readonly("spacing", &SampledState::spacing)
      .def_property_readonly("amplitudes", &SampledState::amplitudes);

  m.def("discrete_fourier_partner", &discrete_fourier_partner,
        py::arg("state"), py::arg("hbar") = 1.0);

  m.def("compactify", &compactify, py::arg("u"), py::arg("s"));
  m.def("decompactify", &decompactify, py::arg("t"), py::arg("s"));
  m.def("compactified_jacobian", &compactified_jacobian, py::arg("t"),
        py::arg("s"));

  py::class_<UniformBins>(m, "UniformBins")
      .def(py::init<double, double>(), py::arg("width"), py::arg("anchor") = 0.0)
      .def_readonly("width", &UniformBins::width)
      .def_readonly("anchor", &UniformBins::anchor);
  py::class_<HalfLineBins>(m, "HalfLineBins")
      .def(py::init<double>(), py::arg("split") = 0.0)
      .def_readonly("split", &HalfLineBins::split);
  py::class_<CompactifiedBins>(m, "CompactifiedBins")
      .def(py::init<double, double>(), py::arg("s"), py::arg("dt"))
      .def_readonly("s", &CompactifiedBins::s)
      .def_readonly("dt", &CompactifiedBins::dt);

  py::class_<ProbabilityVector>(m, "ProbabilityVector")
      .def_readonly("probs", &ProbabilityVector::probs)
      .def_readonly("first_index", &ProbabilityVector::first_index)
      .def_readonly("tail_mass", &ProbabilityVector::tail_mass);

  def_state_overloads<GaussianState>(m);
  def_state_overloads<BoxState>(m);
  def_state_overloads<SampledState>(m);

  py::class_<EntropyOrderPair>(m, "EntropyOrderPair")
      .def(py::init<double, double>(), py::arg("alpha"), py::arg("beta"))
      .def_static("from_alpha", &EntropyOrderPair::from_alpha, py::arg("alpha"))
      .def_property_readonly("alpha", &EntropyOrderPair::alpha)
      .def_property_readonly("beta", &EntropyOrderPair::beta);

  m.def("shannon", &shannon, py::arg("pv"));
  m.def("renyi", &renyi, py::arg("pv"), py::arg("alpha"));
  m.def("tsallis", &tsallis, py::arg("pv"), py::arg("q"));
  m.def("norm_sum", &norm_sum, py::arg("pv"), py::arg("order"));
  m.def("shannon_tail_bound", &shannon_tail_bound, py::arg("pv"));
  m.def("renyi_tail_bound", &renyi_tail_bound, py::arg("pv"), py::arg("alpha"));

  py::class_<BoundCheck>(m, "BoundCheck")
      .def_readonly("lhs", &BoundCheck::lhs)
      .def_readonly("rhs", &BoundCheck::rhs)
      .def_readonly("margin", &BoundCheck::margin)
      .def_readonly("satisfied", &BoundCheck::satisfied)
      .def_readonly("context", &BoundCheck::context);

  m.def("conjugate_order", &conjugate_order, py::arg("alpha"));
  m.def(
      "renyi_bound",
      [](const EntropyOrderPair& pair, double dx, double dp, double hbar) {
        return renyi_bound(pair, dx, dp, consts_of(hbar));
      },
      py::arg("pair"), py::arg("dx"), py::arg("dp"), py::arg("hbar") = 1.0);
  m.def(
      "shannon_bound",
      [](double dx, double dp, double hbar) {
        return shannon_bound(dx, dp, consts_of(hbar));
      },
      py::arg("dx"), py::arg("dp"), py::arg("hbar") = 1.0);
  m.def(
      "ww_bound",
      [](double dx, double dp, double hbar) {
        return ww_bound(dx, dp, consts_of(hbar));
      },
      py::arg("dx"), py::arg("dp"), py::arg("hbar") = 1.0);
  m.def("ww_offset", &ww_offset, py::arg("a"));
  m.def(
      "eta",
      [](const EntropyOrderPair& pair, double dx, double dp, double hbar) {
        return eta(pair, dx, dp, consts_of(hbar));
      },
      py::arg("pair"), py::arg("dx"), py::arg("dp"), py::arg("hbar") = 1.0);
  m.def("eta_compactified", &eta_compactified, py::arg("pair"),
        py::arg("dt_x"), py::arg("dt_p"));
  m.def("check_norm_inequality", &check_norm_inequality, py::arg("pv_p"),
        py::arg("pv_x"), py::arg("pair"), py::arg("eta_value"));
  m.def("violation_threshold", &violation_threshold, py::arg("alpha"));

  py::class_<GaussianScenarioParams>(m, "GaussianScenarioParams")
      .def(py::init([](double delta, double alpha) {
             return GaussianScenarioParams{delta, alpha};
           }),
           py::arg("delta"), py::arg("alpha") = 1.0)
      .def_readonly("delta", &GaussianScenarioParams::delta)
      .def_readonly("alpha", &GaussianScenarioParams::alpha);

  py::class_<BoxScenarioParams>(m, "BoxScenarioParams")
      .def(py::init([](double s_x, double dt_x, double alpha, double s_p) {
             return BoxScenarioParams{s_x, dt_x, alpha, s_p};
           }),
           py::arg("s_x"), py::arg("dt_x"), py::arg("alpha"),
           py::arg("s_p") = 1.0)
      .def_readonly("s_x", &BoxScenarioParams::s_x)
      .def_readonly("dt_x", &BoxScenarioParams::dt_x)
      .def_readonly("alpha", &BoxScenarioParams::alpha)
      .def_readonly("s_p", &BoxScenarioParams::s_p);

  py::class_<ViolationReport>(m, "ViolationReport")
      .def_readonly("closed_form_value", &ViolationReport::closed_form_value)
      .def_readonly("pipeline_value", &ViolationReport::pipeline_value)
      .def_readonly("reference_bound", &ViolationReport::reference_bound)
      .def_readonly("agreement_error", &ViolationReport::agreement_error)
      .def_readonly("violated", &ViolationReport::violated)
      .def_readonly("threshold", &ViolationReport::threshold)
      .def_readonly("details", &ViolationReport::details);

  m.def("gaussian_two_bin_entropy_sum", &gaussian_two_bin_entropy_sum,
        py::arg("delta"));
  m.def(
      "run_gaussian_counterexample",
      [](const GaussianScenarioParams& params, double hbar) {
        return run_gaussian_counterexample(params, consts_of(hbar));
      },
      py::arg("params"), py::arg("hbar") = 1.0);
  m.def(
      "run_box_counterexample",
      [](const BoxScenarioParams& params, double hbar) {
        return run_box_counterexample(params, consts_of(hbar));
      },
      py::arg("params"), py::arg("hbar") = 1.0);
  py::class_<ParameterRange>(m, "ParameterRange")
      .def(py::init([](double lo, double hi) {
             return ParameterRange{lo, hi};
           }),
           py::arg("lo"), py::arg("hi"))
      .def_readonly("lo", &ParameterRange::lo)
      .def_readonly("hi", &ParameterRange::hi);

  py::class_<FamilySpec>(m, "FamilySpec")
      .def(py::init([](double x0, double p0, double sigma,
                       std::optional<ParameterRange> x0_range,
                       std::optional<ParameterRange> sigma_range) {
             FamilySpec spec;
             spec.x0 = x0;
             spec.p0 = p0;
             spec.sigma = sigma;
             spec.x0_range = x0_range;
             spec.sigma_range = sigma_range;
             return spec;
           }),
           py::arg("x0") = 0.0, py::arg("p0") = 0.0, py::arg("sigma") = 1.0,
           py::arg("x0_range") = std::nullopt,
           py::arg("sigma_range") = std::nullopt);

  py::class_<Optimum>(m, "Optimum")
      .def_readonly("best_parameters", &Optimum::best_parameters)
      .def_readonly("best_value", &Optimum::best_value)
      .def_readonly("bound_value", &Optimum::bound_value)
      .def_readonly("gap", &Optimum::gap)
      .def_readonly("evaluations", &Optimum::evaluations)
      .def_readonly("converged", &Optimum::converged);

  m.def(
      "minimize_entropy_sum",
      [](const FamilySpec& family, double dx, double dp, double alpha,
         double hbar, long long budget, std::uint64_t seed) {
        return minimize_entropy_sum(family, dx, dp, alpha, consts_of(hbar),
                                    budget, seed);
      },
      py::arg("family"), py::arg("dx"), py::arg("dp"), py::arg("alpha"),
      py::arg("hbar") = 1.0, py::arg("budget") = 500, py::arg("seed") = 0);
}
