#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cadlag/catalog.hpp"
#include "cadlag/convergence.hpp"
#include "cadlag/demo.hpp"
#include "cadlag/functionals.hpp"
#include "cadlag/io.hpp"
#include "cadlag/witnesses.hpp"

namespace py = pybind11;
using namespace cadlag;

PYBIND11_MODULE(_cadlag, m) {
  m.doc() = "Exact analysis of cadlag step paths: functionals, Stieltjes "
            "integration and convergence oracles for the S, J1 and mJ1 "
            "topologies";

  py::class_<CadlagStep>(m, "CadlagStep")
      .def(py::init<double, std::vector<double>, std::vector<double>>(),
           py::arg("horizon"), py::arg("breakpoints"), py::arg("values"))
      .def_static("constant", &CadlagStep::constant, py::arg("value"),
                  py::arg("horizon"))
      .def_static("indicator", &CadlagStep::indicator, py::arg("from_time"),
                  py::arg("horizon"), py::arg("scale") = 1.0)
      .def("eval", &CadlagStep::eval, py::arg("t"))
      .def_property_readonly("horizon", &CadlagStep::horizon)
      .def_property_readonly("breakpoints", &CadlagStep::breakpoints)
      .def_property_readonly("values", &CadlagStep::values)
      .def("__eq__", [](const CadlagStep& a, const CadlagStep& b) { return a == b; })
      .def("__repr__", [](const CadlagStep& x) {
        return "CadlagStep(" + to_json(x).dump() + ")";
      });

  py::class_<PiecewiseLinear>(m, "PiecewiseLinear")
      .def(py::init<std::vector<double>, std::vector<double>>(),
           py::arg("nodes"), py::arg("values"))
      .def_static("constant", &PiecewiseLinear::constant, py::arg("value"),
                  py::arg("horizon"))
      .def("eval", &PiecewiseLinear::eval, py::arg("t"))
      .def_property_readonly("horizon", &PiecewiseLinear::horizon)
      .def_property_readonly("nodes", &PiecewiseLinear::nodes)
      .def_property_readonly("values", &PiecewiseLinear::values)
      .def("sup_norm", &PiecewiseLinear::sup_norm)
      .def("total_variation", &PiecewiseLinear::total_variation);

  py::class_<IntegratorPath>(m, "IntegratorPath")
      .def(py::init<std::vector<double>, std::vector<double>>(),
           py::arg("nodes"), py::arg("values"))
      .def_static("zero", &IntegratorPath::zero, py::arg("horizon"))
      .def_static("identity", &IntegratorPath::identity, py::arg("horizon"))
      .def("eval", &IntegratorPath::eval, py::arg("t"))
      .def_property_readonly("horizon", &IntegratorPath::horizon)
      .def("fn", &IntegratorPath::fn)
      .def("sup_norm", &IntegratorPath::sup_norm)
      .def("total_variation", &IntegratorPath::total_variation)
      .def("scaled", &IntegratorPath::scaled, py::arg("factor"));

  py::class_<MultiPath>(m, "MultiPath")
      .def(py::init<std::vector<CadlagStep>>(), py::arg("components"))
      .def_property_readonly("dimension", &MultiPath::dimension)
      .def_property_readonly("horizon", &MultiPath::horizon)
      .def("component", &MultiPath::component, py::arg("i"));

  m.def("sup_norm", py::overload_cast<const CadlagStep&>(&sup_norm));
  m.def("total_variation",
        py::overload_cast<const CadlagStep&>(&total_variation));
  m.def("restrict_path", &restrict_path, py::arg("x"), py::arg("horizon"));
  m.def("extend_tilde", &extend_tilde, py::arg("x"), py::arg("eps"));
  m.def("linear_combine", &linear_combine, py::arg("x"), py::arg("y"),
        py::arg("alpha"), py::arg("beta"));
  m.def("extend_integrator", &extend_integrator, py::arg("a"),
        py::arg("horizon"));
  m.def("sup_distance",
        py::overload_cast<const CadlagStep&, const CadlagStep&>(&sup_distance));

  py::class_<Quantization>(m, "Quantization")
      .def_readonly("eps", &Quantization::eps)
      .def_readonly("skeleton", &Quantization::skeleton)
      .def_readonly("stopping_times", &Quantization::stopping_times)
      .def_readonly("jump_count", &Quantization::jump_count)
      .def_readonly("jump_decomposition", &Quantization::jump_decomposition);

  m.def("upcrossings", &upcrossings, py::arg("x"), py::arg("a"), py::arg("b"));
  m.def("oscillations", &oscillations, py::arg("x"), py::arg("eta"));
  m.def("quantize", &quantize, py::arg("x"), py::arg("eps"));
  m.def("quantization_bound_check", &quantization_bound_check, py::arg("x"),
        py::arg("eps"));

  m.def("integrate_f_dv", &integrate_f_dv, py::arg("f"), py::arg("v"));
  m.def("integrate_x_dA",
        py::overload_cast<const CadlagStep&, const IntegratorPath&>(
            &integrate_x_dA),
        py::arg("x"), py::arg("a"));
  m.def("integration_by_parts_residual", &integration_by_parts_residual,
        py::arg("v"), py::arg("a"));
  m.def("primitive_of_density", &primitive_of_density, py::arg("f"));
  m.def("default_test_family", &default_test_family, py::arg("horizon"),
        py::arg("level") = 6);

  py::class_<PathSequence>(m, "PathSequence")
      .def(py::init([](std::function<CadlagStep(int)> terms, CadlagStep limit,
                       int depth) {
             return PathSequence{std::move(terms), std::move(limit), depth};
           }),
           py::arg("terms"), py::arg("limit"),
           py::arg("depth") = std::numeric_limits<int>::max())
      .def_readonly("limit", &PathSequence::limit);

  py::class_<WitnessFamily>(m, "WitnessFamily")
      .def(py::init([](double eps, std::function<CadlagStep(int)> witnesses,
                       CadlagStep limit_witness) {
             return WitnessFamily{eps, std::move(witnesses),
                                  std::move(limit_witness)};
           }),
           py::arg("eps"), py::arg("witnesses"), py::arg("limit_witness"))
      .def_readonly("eps", &WitnessFamily::eps);

  py::class_<IntegratorSequence>(m, "IntegratorSequence")
      .def(py::init([](std::string id, std::function<IntegratorPath(int)> terms,
                       IntegratorPath limit) {
             return IntegratorSequence{std::move(id), std::move(terms),
                                       std::move(limit)};
           }),
           py::arg("id"), py::arg("terms"), py::arg("limit"))
      .def_readonly("id", &IntegratorSequence::id);

  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("pass_", &ConvergenceReport::pass)
      .def_readonly("mode", &ConvergenceReport::mode)
      .def_readonly("depth", &ConvergenceReport::depth)
      .def_readonly("tolerance", &ConvergenceReport::tolerance)
      .def("to_json", [](const ConvergenceReport& r) { return to_json(r).dump(); })
      .def("__repr__", [](const ConvergenceReport& r) {
        return std::string(r.pass ? "<PASS " : "<FAIL ") + r.mode + ">";
      });

  py::class_<CompactnessReport>(m, "CompactnessReport")
      .def_property_readonly("bounded_i", &CompactnessReport::bounded_i)
      .def_property_readonly("bounded_ii", &CompactnessReport::bounded_ii)
      .def_property_readonly("bounded_iii", &CompactnessReport::bounded_iii)
      .def("to_json",
           [](const CompactnessReport& r) { return to_json(r).dump(); });

  m.def("quantization_witnesses", &quantization_witnesses, py::arg("seq"),
        py::arg("eps"));
  m.def("s_witness_check", &s_witness_check, py::arg("seq"), py::arg("family"),
        py::arg("depth"), py::arg("tol"),
        py::arg("test_family") = std::vector<PiecewiseLinear>{});
  m.def("s_dual_test", &s_dual_test, py::arg("seq"), py::arg("catalog"),
        py::arg("depth"), py::arg("tol"));
  m.def("tau_convergence_test", &tau_convergence_test, py::arg("seq"),
        py::arg("depth"), py::arg("tol"));
  m.def("weak_star_test", &weak_star_test, py::arg("terms"), py::arg("limit"),
        py::arg("test_family"), py::arg("depth"), py::arg("tol"));
  m.def("sigma_seminorm", &sigma_seminorm, py::arg("x"), py::arg("family"));
  m.def("uniform_seminorm_convergence", &uniform_seminorm_convergence,
        py::arg("seq"), py::arg("family"), py::arg("depth"), py::arg("tol"));
  m.def("relative_s_compactness", &relative_s_compactness, py::arg("paths"),
        py::arg("level_grid"), py::arg("eta_grid"), py::arg("eps_grid"));
  m.def(
      "j1_distance_bounds",
      [](const CadlagStep& x, const CadlagStep& y, int grid) {
        DistanceBounds b = j1_distance_bounds(x, y, grid);
        return std::make_pair(b.lower, b.upper);
      },
      py::arg("x"), py::arg("y"), py::arg("grid") = 8);
  m.def(
      "mj1_distance_bounds",
      [](const CadlagStep& x, const CadlagStep& y, double eps, int grid) {
        DistanceBounds b = mj1_distance_bounds(x, y, eps, grid);
        return std::make_pair(b.lower, b.upper);
      },
      py::arg("x"), py::arg("y"), py::arg("eps") = 1.0, py::arg("grid") = 8);
  m.def("mj1_compactness_modulus", &mj1_compactness_modulus, py::arg("paths"),
        py::arg("delta"));
  m.def("uniform_convergence_test", &uniform_convergence_test, py::arg("seq"),
        py::arg("depth"), py::arg("tol"));
  m.def("j1_convergence_test", &j1_convergence_test, py::arg("seq"),
        py::arg("depth"), py::arg("tol"), py::arg("grid") = 8);
  m.def("mj1_convergence_test", &mj1_convergence_test, py::arg("seq"),
        py::arg("depth"), py::arg("tol"), py::arg("eps") = 1.0,
        py::arg("grid") = 8);
  m.def("default_dual_catalog",
        [](const PathSequence& seq, int depth, double tol) {
          return default_dual_catalog(seq, depth, tol);
        },
        py::arg("seq"), py::arg("depth"), py::arg("tol"));

  py::class_<UpcrossingWitness>(m, "UpcrossingWitness")
      .def_readonly("integrator", &UpcrossingWitness::integrator)
      .def_readonly("a", &UpcrossingWitness::a)
      .def_readonly("b", &UpcrossingWitness::b)
      .def_readonly("crossings", &UpcrossingWitness::crossings)
      .def_readonly("integral", &UpcrossingWitness::integral)
      .def_readonly("variation", &UpcrossingWitness::variation)
      .def_readonly("sup", &UpcrossingWitness::sup);

  m.def("lemma_upcrossing_witness", &lemma_upcrossing_witness, py::arg("x"),
        py::arg("a"), py::arg("b"));
  m.def("unboundedness_refuter", &unboundedness_refuter, py::arg("x"),
        py::arg("level"));
  m.def("figure1_spikes", &figure1_spikes, py::arg("n"), py::arg("horizon"));
  m.def("figure2_jumps", &figure2_jumps, py::arg("n"), py::arg("horizon"));
  m.def("sawtooth_path", &sawtooth_path, py::arg("teeth"), py::arg("low"),
        py::arg("high"), py::arg("horizon"));
  m.def("random_step_path", &random_step_path, py::arg("seed"),
        py::arg("segments"), py::arg("value_scale"), py::arg("horizon"));

  m.def("path_to_json", [](const CadlagStep& x) { return to_json(x).dump(); });
  m.def("path_from_json",
        [](const std::string& text) { return path_from_json(json::parse(text)); });
}
