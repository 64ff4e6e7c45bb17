#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orderpoly/bernoulli.hpp"
#include "orderpoly/catalog.hpp"
#include "orderpoly/eulerian.hpp"
#include "orderpoly/framework.hpp"
#include "orderpoly/omega_graph.hpp"
#include "orderpoly/order_poly.hpp"
#include "orderpoly/poset_io.hpp"
#include "orderpoly/qsym.hpp"
#include "orderpoly/unlabeled.hpp"
#include "orderpoly/validation.hpp"

namespace py = pybind11;
using namespace orderpoly;

namespace {

py::object fraction(const Rational& r)
{
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(py::str(to_fraction_string(r)));
}

Rational from_python(const py::handle& h)
{
    return parse_rational(py::str(h).cast<std::string>());
}

py::list coefficient_list(const UniPoly& p)
{
    py::list out;
    for (const auto& c : p.coefficients()) {
        out.append(fraction(c));
    }
    return out;
}

py::dict qsym_dict(const QSym& f)
{
    py::dict out;
    for (const auto& [e, c] : f.terms()) {
        py::tuple key(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            key[i] = py::int_(e[i]);
        }
        out[key] = fraction(c);
    }
    return out;
}

py::object carrier_to_python(const CarrierValue& v)
{
    if (const auto* p = std::get_if<UniPoly>(&v)) {
        return py::cast(*p);
    }
    if (const auto* r = std::get_if<LocalizedRatio>(&v)) {
        return py::cast(*r);
    }
    return qsym_dict(std::get<QSym>(v));
}

UniPoly order_poly_route(const LabeledPoset& lp, const std::string& route)
{
    if (route == "recursive") {
        return order_poly_recursive(lp);
    }
    if (route == "matrix") {
        return order_poly_matrix(lp);
    }
    if (route == "oracle") {
        return order_poly_bruteforce(lp);
    }
    throw py::value_error("route must be 'recursive', 'matrix' or 'oracle'");
}

} // namespace

PYBIND11_MODULE(orderpoly, m)
{
    m.doc() = "Exact order polynomials, Eulerian polynomials and related invariants of labeled posets";

    py::register_exception<PosetParseError>(m, "PosetParseError", PyExc_ValueError);
    py::register_exception<OracleBoundError>(m, "OracleBoundError", PyExc_ValueError);

    py::class_<UniPoly>(m, "Polynomial")
        .def(py::init([](const py::iterable& coeffs, const std::string& var) {
                 std::vector<Rational> c;
                 for (auto x : coeffs) {
                     c.push_back(from_python(x));
                 }
                 return UniPoly(std::move(c), var);
             }),
             py::arg("coefficients"), py::arg("variable") = "t")
        .def_property_readonly("coefficients", &coefficient_list, "Coefficients by increasing power, as Fractions")
        .def_property_readonly("variable", &UniPoly::variable)
        .def_property_readonly("degree", &UniPoly::degree)
        .def("__call__", [](const UniPoly& p, const py::handle& x) { return fraction(p.eval(from_python(x))); })
        .def("__eq__", [](const UniPoly& a, const UniPoly& b) { return a == b; })
        .def("__str__", &UniPoly::to_string)
        .def("__repr__", [](const UniPoly& p) { return "Polynomial(" + p.to_string() + ")"; });

    py::class_<LocalizedRatio>(m, "LocalizedRatio")
        .def_property_readonly("numerator", &LocalizedRatio::numerator)
        .def_property_readonly("pole_order", &LocalizedRatio::pole_order)
        .def("series", [](const LocalizedRatio& r, unsigned n) {
            py::list out;
            for (const auto& c : r.series(n)) {
                out.append(fraction(c));
            }
            return out;
        })
        .def("__eq__", [](const LocalizedRatio& a, const LocalizedRatio& b) { return a == b; })
        .def("__str__", &LocalizedRatio::to_string);

    py::class_<Poset>(m, "Poset")
        .def(py::init(&make_poset), py::arg("size"), py::arg("relations") = std::vector<std::pair<std::size_t, std::size_t>>{})
        .def_property_readonly("size", &Poset::size)
        .def("less", &Poset::less)
        .def("covers", &Poset::covers)
        .def("__len__", &Poset::size)
        .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; });

    py::class_<LabeledPoset>(m, "LabeledPoset")
        .def(py::init<Poset, Labeling>(), py::arg("poset"), py::arg("labels"))
        .def_property_readonly("poset", &LabeledPoset::poset)
        .def_property_readonly("labels", &LabeledPoset::omega)
        .def("__len__", &LabeledPoset::size)
        .def("__str__", &format_poset_file);

    py::register_exception<PosetError>(m, "PosetError", PyExc_ValueError);

    m.def("chain", &make_chain, py::arg("n"));
    m.def("antichain", &make_antichain, py::arg("n"));
    m.def("shrub", &make_shrub, py::arg("n"), "Root below n incomparable elements");
    m.def("natural", [](const Poset& p) { return LabeledPoset(p, natural_labeling(p)); });
    m.def("reversed", [](const Poset& p) { return LabeledPoset(p, reversed_labeling(p)); });
    m.def("parse_poset", &parse_poset_file, py::arg("text"));
    m.def("posets_up_to_iso", &posets_up_to_iso, py::arg("n"));

    m.def("ideals", [](const LabeledPoset& lp) {
        py::list out;
        for (ElementSet s : enumerate_ideals(lp.poset())) {
            out.append(py::cast(s.members()));
        }
        return out;
    });
    m.def("omega_natural_ideals", [](const LabeledPoset& lp) {
        py::list out;
        for (ElementSet s : omega_natural_ideals(lp)) {
            out.append(py::cast(s.members()));
        }
        return out;
    });
    m.def("omega_graph_dot", [](const LabeledPoset& lp) { return build_omega_graph(lp).to_dot(); });
    m.def("path_counts", [](const LabeledPoset& lp) {
        py::list out;
        for (const auto& c : count_paths(build_omega_graph(lp)).c) {
            out.append(py::int_(py::str(c.get_str())));
        }
        return out;
    });

    m.def("order_poly", &order_poly_route, py::arg("poset"), py::arg("route") = "recursive");
    m.def("order_poly_unlabeled", &order_poly_unlabeled);
    m.def("strict_order_poly", &strict_order_poly);
    m.def("phi", [](const LabeledPoset& lp) { return fraction(phi(lp)); });
    m.def(
        "eulerian",
        [](const LabeledPoset& lp, const std::string& route) {
            if (route == "chains") {
                return eulerian_from_chains(lp).e;
            }
            if (route == "recursive") {
                return eulerian_recursive(lp);
            }
            throw py::value_error("route must be 'chains' or 'recursive'");
        },
        py::arg("poset"), py::arg("route") = "recursive");
    m.def("e_tilde", [](const LabeledPoset& lp) { return e_tilde_recursive(lp); });
    m.def(
        "bernoulli",
        [](unsigned n, const std::string& route) {
            if (route == "shrub") {
                return fraction(bernoulli_from_shrub(n));
            }
            if (route == "multinomial") {
                return fraction(bernoulli_multinomial(n));
            }
            if (route == "oracle") {
                return fraction(bernoulli_numbers_oracle(n).b[n]);
            }
            throw py::value_error("route must be 'oracle', 'shrub' or 'multinomial'");
        },
        py::arg("n"), py::arg("route") = "oracle");
    m.def(
        "qsym",
        [](const LabeledPoset& lp, std::size_t vars, const std::string& route) {
            if (route == "direct") {
                return qsym_dict(qsym_direct(lp, vars));
            }
            if (route == "recursive") {
                return qsym_dict(qsym_recursive(lp, vars));
            }
            throw py::value_error("route must be 'direct' or 'recursive'");
        },
        py::arg("poset"), py::arg("variables"), py::arg("route") = "direct",
        "Terms of K(P, omega; x) in the given number of variables as {exponents: coefficient}");
    m.def(
        "invariant",
        [](const LabeledPoset& lp, const std::string& spec) {
            return carrier_to_python(run_invariant(parse_invariant_spec(spec), lp));
        },
        py::arg("poset"), py::arg("spec"));

    m.def("check", [](std::size_t max_size) {
        py::list out;
        for (const auto& r : run_check_suite(max_size)) {
            py::dict row;
            row["id"] = r.id;
            row["name"] = r.name;
            row["passed"] = r.passed;
            row["cases"] = r.cases;
            row["detail"] = r.detail;
            out.append(row);
        }
        return out;
    }, py::arg("max_size") = 4);
}
