#include "pluecker/curve.hpp"
#include "pluecker/derivation.hpp"
#include "pluecker/json_io.hpp"
#include "pluecker/plot.hpp"
#include "pluecker/solver.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pluecker;
using numeric::PlaneCurve;
using numeric::SolverConfig;

namespace {

SolverConfig make_config(std::uint64_t seed, long starts, double tol_residual, double dedup) {
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.start_count = starts;
    cfg.residual_tolerance = tol_residual;
    cfg.dedup_distance = dedup;
    return cfg;
}

long expected_bitangents(int degree) {
    return degree < 2 ? 0 : polyring::to_long(derivation::bitangent_count_at(degree));
}

long expected_flexes(int degree) {
    return degree < 3 ? 0 : polyring::to_long(derivation::flex_count_at(degree));
}

} // namespace

PYBIND11_MODULE(_pluecker, m) {
    m.doc() = "Bitangents and flexes of plane curves: exact intersection-theory derivation "
              "with a floating-point multistart oracle";

    py::register_exception<numeric::ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<PlaneCurve>(m, "PlaneCurve")
        .def_static("parse", &PlaneCurve::parse, py::arg("text"))
        .def_static("random", &PlaneCurve::random, py::arg("degree"), py::arg("seed"))
        .def_property_readonly("degree", &PlaneCurve::degree)
        .def("__str__", &PlaneCurve::str)
        .def("__repr__", [](const PlaneCurve& c) { return "PlaneCurve(" + c.str() + ")"; });

    m.def("bitangent_count_polynomial", [] { return derivation::bitangent_count().str(); });
    m.def("flex_count_polynomial", [] { return derivation::flex_count().str(); });
    m.def(
        "bitangent_count_at",
        [](long long d) { return polyring::to_long(derivation::bitangent_count_at(d)); },
        py::arg("degree"));
    m.def(
        "flex_count_at",
        [](long long d) { return polyring::to_long(derivation::flex_count_at(d)); },
        py::arg("degree"));
    m.def("moduli_dim", &chow::moduli_dim, py::arg("r"), py::arg("map_degree"), py::arg("n"));

    m.def("derive_json", [] { return io::report_json(derivation::derivation_report()).dump(); });
    m.def("identity_checks", [] { return io::identity_checks(); });

    m.def(
        "find_bitangents_json",
        [](const PlaneCurve& curve, std::uint64_t seed, long starts, double tol_residual,
           double dedup, int workers) {
            const long expected = expected_bitangents(curve.degree());
            const auto solutions = numeric::find_bitangents(
                curve, make_config(seed, starts, tol_residual, dedup), expected, workers);
            return io::bitangents_json(curve.degree(), expected, solutions).dump();
        },
        py::arg("curve"), py::arg("seed") = 1, py::arg("starts") = 0,
        py::arg("tol_residual") = 1e-10, py::arg("dedup") = 1e-6, py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "find_flexes_json",
        [](const PlaneCurve& curve, std::uint64_t seed, long starts, double tol_residual,
           double dedup, int workers) {
            const long expected = expected_flexes(curve.degree());
            const auto solutions = numeric::find_flexes(
                curve, make_config(seed, starts, tol_residual, dedup), expected, workers);
            return io::flexes_json(curve.degree(), expected, solutions).dump();
        },
        py::arg("curve"), py::arg("seed") = 1, py::arg("starts") = 0,
        py::arg("tol_residual") = 1e-10, py::arg("dedup") = 1e-6, py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "plot_svg",
        [](const PlaneCurve& curve, double xmin, double xmax, double ymin, double ymax,
           std::uint64_t seed, long starts, int workers) {
            numeric::PlotOptions opts;
            opts.xmin = xmin;
            opts.xmax = xmax;
            opts.ymin = ymin;
            opts.ymax = ymax;
            const auto solutions =
                numeric::find_bitangents(curve, make_config(seed, starts, 1e-10, 1e-6),
                                         expected_bitangents(curve.degree()), workers);
            return numeric::render_plot_svg(curve, solutions, opts, nullptr);
        },
        py::arg("curve"), py::arg("xmin") = -2.0, py::arg("xmax") = 2.0, py::arg("ymin") = -2.0,
        py::arg("ymax") = 2.0, py::arg("seed") = 1, py::arg("starts") = 0, py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());
}
