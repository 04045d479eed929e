#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbitkit/asymptotics.hpp"
#include "orbitkit/cli.hpp"
#include "orbitkit/verify.hpp"
#include "orbitkit/zeta.hpp"

namespace py = pybind11;
using namespace orbitkit;

namespace {

py::int_ to_py(const BigInt& v)
{
    auto s = v.get_str(10);
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& v) { return BigInt(py::repr(v).cast<std::string>(), 10); }

py::object to_py(const Rational& q)
{
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(q.get_num()), to_py(q.get_den()));
}

py::list to_py(std::span<const BigInt> xs)
{
    py::list out;
    for (const auto& x : xs) {
        out.append(to_py(x));
    }
    return out;
}

py::list to_py(const PowerSeries& s)
{
    py::list out;
    for (const auto& c : s.coeffs()) {
        out.append(to_py(c));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_orbitkit, m)
{
    m.doc() = "Exact orbit counting and zeta-function data for the circle-doubling map and its 3-adic extension";

    static py::exception<ValidationError> validation_error(m, "ValidationError", PyExc_ValueError);
    static py::exception<InternalError> internal_error(m, "InternalError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const ValidationError& e) {
            PyErr_SetString(validation_error.ptr(), e.what());
        } catch (const InternalError& e) {
            PyErr_SetString(internal_error.ptr(), e.what());
        }
    });

    // arith
    m.def("divisors", &divisors, py::arg("n"));
    m.def("mobius", &mobius, py::arg("n"));
    m.def("ord_p", [](const py::int_& n, unsigned long p) { return ord_p(from_py(n), p); }, py::arg("n"),
          py::arg("p"));
    m.def("padic_abs", [](const py::int_& n, unsigned long p) {
              auto a = padic_abs(from_py(n), p);
              return py::make_tuple(a.prime(), a.valuation());
          },
          py::arg("n"), py::arg("p"), "(prime, valuation) with |n|_p = prime ** -valuation");
    m.def("padic_factor", [](std::uint64_t n) { return padic_factor(n).valuation(); }, py::arg("n"),
          "Valuation a with |2^n - 1|_3 = 3 ** -a");

    // counting
    py::class_<MapSpec>(m, "MapSpec")
        .def_static("circle_doubling", &MapSpec::circle_doubling)
        .def_static("three_adic_extension", &MapSpec::three_adic_extension)
        .def_static("iterate", &MapSpec::iterate, py::arg("base"), py::arg("k"))
        .def_static("custom",
                    [](const std::vector<py::int_>& counts) {
                        std::vector<BigInt> values;
                        for (const auto& c : counts) {
                            values.push_back(from_py(c));
                        }
                        return MapSpec::custom(std::move(values));
                    },
                    py::arg("orbit_counts"))
        .def_property_readonly("name", &MapSpec::name)
        .def_property_readonly("entropy", [](const MapSpec& s) { return s.entropy().value(); })
        .def("__repr__", [](const MapSpec& s) { return "MapSpec(" + s.name() + ")"; });

    py::class_<OrbitTable>(m, "OrbitTable")
        .def_property_readonly("spec", &OrbitTable::spec)
        .def_property_readonly("n_max", &OrbitTable::n_max)
        .def("fix", [](const OrbitTable& t, std::uint64_t n) { return to_py(t.fix(n)); }, py::arg("n"))
        .def("least", [](const OrbitTable& t, std::uint64_t n) { return to_py(t.least(n)); }, py::arg("n"))
        .def("orbits", [](const OrbitTable& t, std::uint64_t n) { return to_py(t.orbits(n)); }, py::arg("n"))
        .def_property_readonly("F", [](const OrbitTable& t) { return to_py(t.fix_counts()); })
        .def_property_readonly("L", [](const OrbitTable& t) { return to_py(t.least_counts()); })
        .def_property_readonly("O", [](const OrbitTable& t) { return to_py(t.orbit_counts()); })
        .def("check", &OrbitTable::check);

    m.def("fix_count", [](const MapSpec& s, std::uint64_t n) { return to_py(fix_count(s, n)); }, py::arg("spec"),
          py::arg("n"));
    m.def("build_table", &build_table, py::arg("spec"), py::arg("n_max"));
    m.def("orbit_count_iterate",
          [](const OrbitTable& t, unsigned k, std::uint64_t n) { return to_py(orbit_count_iterate(t, k, n)); },
          py::arg("base"), py::arg("k"), py::arg("n"));
    m.def("iterate_square_identity",
          [](const OrbitTable& t, std::uint64_t n) { return to_py(iterate_square_identity(t, n)); }, py::arg("base"),
          py::arg("n"));

    // asymptotics
    m.def("pi_sum", [](const OrbitTable& t, std::uint64_t x) { return to_py(pi_sum(t, x)); }, py::arg("table"),
          py::arg("x"));
    m.def("pnt_ratio", [](const OrbitTable& t, std::uint64_t x) { return to_py(pnt_ratio(t, x)); },
          py::arg("table"), py::arg("x"));
    m.def("ratio_series",
          [](const OrbitTable& t, std::uint64_t x_max, std::uint64_t burn_in) {
              py::list out;
              for (const auto& p : ratio_series(t, x_max, burn_in)) {
                  out.append(py::dict(py::arg("x") = p.x, py::arg("pi") = to_py(p.pi),
                                      py::arg("ratio") = to_py(p.ratio), py::arg("running_min") = to_py(p.running_min),
                                      py::arg("running_max") = to_py(p.running_max)));
              }
              return out;
          },
          py::arg("table"), py::arg("x_max"), py::arg("burn_in") = kBands.burn_in);
    m.def("delta_gap",
          [](const OrbitTable& tf, const OrbitTable& tg, std::uint64_t x) {
              auto d = delta_gap(tf, tg, x);
              return py::make_tuple(to_py(d.gap), to_py(d.even_bound));
          },
          py::arg("table_f"), py::arg("table_g"), py::arg("x"));
    m.def("merten_series",
          [](const OrbitTable& t, std::uint64_t x_max) {
              py::list out;
              for (const auto& p : merten_series(t, x_max)) {
                  out.append(py::make_tuple(p.x, to_py(p.sum), p.log_x.to_double()));
              }
              return out;
          },
          py::arg("table"), py::arg("x_max"), "List of (X, exact sum, ln X)");

    // zeta
    m.def("xi_series", [](const OrbitTable& t, std::size_t n) { return to_py(xi_series(t, n)); }, py::arg("table"),
          py::arg("degree"));
    m.def("zeta_series", [](const OrbitTable& t, std::size_t n) { return to_py(zeta_series(t, n)); },
          py::arg("table"), py::arg("degree"));
    m.def("orbit_product_series",
          [](const OrbitTable& t, std::size_t n) { return to_py(orbit_product_series(t, n)); }, py::arg("table"),
          py::arg("degree"));
    m.def("xi1_direct", [](std::size_t n) { return to_py(xi1_direct(n)); }, py::arg("degree"));
    m.def("xi1_closed_form", [](std::size_t n) { return to_py(xi1_closed_form(n)); }, py::arg("degree"));
    m.def("xi_decomposition", [](std::size_t n) { return to_py(xi_decomposition(n)); }, py::arg("degree"));
    m.def("modulus_product", py::overload_cast<std::complex<double>, unsigned>(&modulus_product), py::arg("z"),
          py::arg("terms_j") = 10);
    m.def("modulus_product_polar",
          [](double radius, std::int64_t num, std::uint64_t den, unsigned j) {
              return modulus_product(PolarPoint{radius, {num, den}}, j);
          },
          py::arg("radius"), py::arg("angle_num"), py::arg("angle_den"), py::arg("terms_j") = 10,
          "|zeta| at radius * exp(2 pi i angle_num / angle_den)");
    m.def("series_modulus", &series_modulus, py::arg("table"), py::arg("z"), py::arg("terms_n"));
    m.def("radial_scan",
          [](std::int64_t num, std::uint64_t den, const std::vector<double>& radii, unsigned j, std::size_t n,
             const OrbitTable& t) {
              py::list out;
              for (const auto& r : radial_scan(AngleTurns{num, den}, radii, j, n, t)) {
                  out.append(py::dict(py::arg("radius") = r.radius, py::arg("angle_num") = r.angle_num,
                                      py::arg("angle_den") = r.angle_den,
                                      py::arg("product_modulus") = r.product_modulus,
                                      py::arg("series_modulus") = r.series_modulus, py::arg("J") = r.terms_j,
                                      py::arg("N") = r.terms_n));
              }
              return out;
          },
          py::arg("angle_num"), py::arg("angle_den"), py::arg("radii"), py::arg("terms_j"), py::arg("terms_n"),
          py::arg("table"));

    m.def("run_invariants",
          [](std::uint64_t max) {
              py::list out;
              for (const auto& r : run_invariants({max, false})) {
                  out.append(py::make_tuple(r.name, r.parameters, r.pass, r.detail));
              }
              return out;
          },
          py::arg("max") = 500);
    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::vector<const char*> argv{"orbitkit"};
              for (const auto& a : args) {
                  argv.push_back(a.c_str());
              }
              std::ostringstream out, err;
              int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Run the command line tool; returns (exit_code, stdout, stderr)");
}
