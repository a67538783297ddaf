#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptwell/classical.hpp"
#include "ptwell/error.hpp"
#include "ptwell/extrapolation.hpp"
#include "ptwell/geometry.hpp"
#include "ptwell/limit.hpp"
#include "ptwell/report.hpp"
#include "ptwell/shooting.hpp"
#include "ptwell/specfun.hpp"
#include "ptwell/wkb.hpp"

namespace py = pybind11;
using namespace ptwell;

namespace {

shooting::Options options(double tol, double radius_factor) { return report::solver_options(tol, radius_factor); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectra of PT-symmetric Hamiltonians p^2 + x^{2M}(ix)^eps";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<BranchCutError>(m, "BranchCutError", domain.ptr());
    auto conv = py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
    py::register_exception<StepUnderflowError>(m, "StepUnderflowError", conv.ptr());
    py::register_exception<OverflowError>(m, "OverflowError", base.ptr());
    py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());

    py::class_<ModelSpec>(m, "ModelSpec")
        .def(py::init([](int M, double epsilon) {
                 ModelSpec s{M, epsilon};
                 validate(s);
                 return s;
             }),
             py::arg("M") = 1, py::arg("epsilon") = 0.0)
        .def_readwrite("M", &ModelSpec::M)
        .def_readwrite("epsilon", &ModelSpec::epsilon)
        .def("degree", &ModelSpec::degree)
        .def("__repr__", [](const ModelSpec& s) {
            return "ModelSpec(M=" + std::to_string(s.M) + ", epsilon=" + py::repr(py::float_(s.epsilon)).cast<std::string>() + ")";
        });

    // specfun
    m.def("gamma", &specfun::gamma, py::arg("x"));
    m.def("euler_gamma", &specfun::euler_gamma);
    m.def("bessel_i", &specfun::bessel_i, py::arg("nu"), py::arg("w"));
    m.def("bessel_k", &specfun::bessel_k, py::arg("nu"), py::arg("w"));
    m.def("bessel_j", &specfun::bessel_j, py::arg("nu"), py::arg("w"));
    m.def("bessel_y", &specfun::bessel_y, py::arg("nu"), py::arg("w"));

    // geometry
    m.def("potential_value", &geometry::potential_value, py::arg("model"), py::arg("x"));
    m.def(
        "wedge_angles",
        [](const ModelSpec& s) {
            const auto w = geometry::wedge_angles(s);
            return py::make_tuple(w.theta_left, w.theta_right, w.opening);
        },
        py::arg("model"), "(theta_left, theta_right, opening)");
    m.def(
        "turning_points",
        [](const ModelSpec& s, double E) {
            const auto t = geometry::turning_points(s, E);
            return py::make_tuple(t.x_left, t.x_right);
        },
        py::arg("model"), py::arg("E"));

    // shooting
    py::class_<shooting::EigenResult>(m, "EigenResult")
        .def_readonly("k", &shooting::EigenResult::k)
        .def_readonly("E", &shooting::EigenResult::E)
        .def_readonly("residual", &shooting::EigenResult::residual)
        .def_readonly("iterations", &shooting::EigenResult::iterations)
        .def_readonly("converged", &shooting::EigenResult::converged)
        .def_readonly("message", &shooting::EigenResult::message)
        .def("__repr__", [](const shooting::EigenResult& r) {
            return "EigenResult(k=" + std::to_string(r.k) + ", E=" + py::repr(py::cast(r.E)).cast<std::string>() +
                   ", converged=" + (r.converged ? "True" : "False") + ")";
        });
    m.def(
        "solve_level",
        [](const ModelSpec& s, int k, std::optional<std::complex<double>> seed, double tol, double radius_factor) {
            py::gil_scoped_release release;
            return shooting::solve_level(s, k, seed, options(tol, radius_factor));
        },
        py::arg("model"), py::arg("k") = 0, py::arg("seed") = py::none(), py::arg("tol") = 1e-10,
        py::arg("radius_factor") = 1.0);
    m.def(
        "mismatch",
        [](const ModelSpec& s, std::complex<double> E, double tol) { return shooting::mismatch(s, E, options(tol, 1.0)); },
        py::arg("model"), py::arg("E"), py::arg("tol") = 1e-10);
    m.def(
        "scan_levels",
        [](const std::vector<ModelSpec>& grid, int k_max, double tol) {
            shooting::ScanResult r;
            {
                py::gil_scoped_release release;
                r = shooting::scan_levels(grid, k_max, options(tol, 1.0));
            }
            py::list out;
            for (const auto& p : r.points) out.append(py::make_tuple(p.model, p.result));
            return py::make_tuple(out, r.monotone);
        },
        py::arg("grid"), py::arg("k_max"), py::arg("tol") = 1e-10, "([(model, EigenResult)], monotone flags per level)");

    // wkb
    m.def("action_integral", &wkb::action_integral, py::arg("model"), py::arg("E"), py::arg("nodes") = 200);
    m.def("wkb_energy_closed", &wkb::energy_closed, py::arg("k"), py::arg("epsilon"));
    m.def("wkb_energy_quadrature", &wkb::energy_quadrature, py::arg("model"), py::arg("k"));
    m.def("wkb_energy_next", &wkb::energy_next, py::arg("k"), py::arg("epsilon"));
    m.def("asymptotic_energy", &wkb::asymptotic_energy, py::arg("M"), py::arg("k"), py::arg("P"), py::arg("epsilon"));
    m.def("ground_expansion_exact", &wkb::ground_expansion_exact, py::arg("epsilon"));
    m.def("ground_expansion_wkb", &wkb::ground_expansion_wkb, py::arg("epsilon"));

    // limit
    py::class_<limit::LimitLevel>(m, "LimitLevel")
        .def_readonly("k", &limit::LimitLevel::k)
        .def_readonly("P", &limit::LimitLevel::P)
        .def_readonly("nu", &limit::LimitLevel::nu)
        .def_readonly("F", &limit::LimitLevel::F);
    m.def("nu_spectrum", &limit::nu_spectrum, py::arg("M"), py::arg("k_max"));
    m.def("quantization_residual", &limit::quantization_residual, py::arg("M"), py::arg("nu"));
    py::class_<limit::LimitWavefunction>(m, "LimitWavefunction")
        .def(py::init<int, double>(), py::arg("M"), py::arg("nu"))
        .def("__call__", &limit::LimitWavefunction::operator(), py::arg("z"))
        .def("log_value", &limit::LimitWavefunction::log_value, py::arg("z"))
        .def("coefficients", &limit::LimitWavefunction::coefficients)
        .def_property_readonly("defect", &limit::LimitWavefunction::defect)
        .def_property_readonly("F", &limit::LimitWavefunction::F);
    m.def("limit_wavefunction", &limit::limit_wavefunction, py::arg("M"), py::arg("nu"), py::arg("z"));
    m.def("scaled_ode_residual", &limit::scaled_ode_residual, py::arg("M"), py::arg("F"), py::arg("z"), py::arg("psi"));
    m.def("F_of_eps", &limit::F_of_eps, py::arg("E"), py::arg("epsilon"), py::arg("M") = 1);
    m.def("E_of_F", &limit::E_of_F, py::arg("F"), py::arg("epsilon"), py::arg("M") = 1);
    m.def("f1_ground", &limit::f1_ground);
    m.def("f1_oracle", &limit::f1_oracle);

    // extrapolation
    m.def("richardson", &extrapolation::richardson, py::arg("epsilons"), py::arg("values"), py::arg("order"));
    m.def("subtract_leading", &extrapolation::subtract_leading, py::arg("epsilons"), py::arg("values"), py::arg("f0"));

    // classical
    m.def(
        "period_exact",
        [](double eps, double E) {
            const auto p = classical::period_exact(eps, E);
            return py::make_tuple(p.T, p.ET_product);
        },
        py::arg("epsilon"), py::arg("E"), "(T, E*T)");
    m.def("period_asymptotic", &classical::period_asymptotic, py::arg("epsilon"), py::arg("E"));

    // reports
    m.def(
        "run_table",
        [](int table_id, double tol, const std::string& format) {
            report::TableReport r;
            {
                py::gil_scoped_release release;
                r = report::run_table(table_id, options(tol, 1.0));
            }
            return format == "json" ? report::table_json(r) : report::table_csv(r);
        },
        py::arg("table_id"), py::arg("tol") = 1e-10, py::arg("format") = "csv");
}
