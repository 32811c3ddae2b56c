// Python bindings for the exact-real kernel: rationals, approximation
// functions, closeness and order, rational bounds, interval maps, the
// calculator layer, and the seeded law suites.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reals/arith.hpp"
#include "reals/expr.hpp"
#include "reals/suites.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace reals;

namespace {

// cpp_int <-> Python int via the decimal string; exact at any size.
py::int_ to_py_int(const Int& n) {
    PyObject* obj = PyLong_FromString(n.str().c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Int to_cpp_int(const py::int_& n) {
    PyObject* s = PyObject_Str(n.ptr());
    if (s == nullptr) throw py::error_already_set();
    return Int(py::reinterpret_steal<py::str>(s).cast<std::string>());
}

const char* order_name(OrderVerdict v) {
    switch (v) {
        case OrderVerdict::Holds: return "holds";
        case OrderVerdict::Fails: return "fails";
        default: return "undecided";
    }
}

const char* closeness_name(Closeness c) {
    switch (c) {
        case Closeness::ProvedClose: return "close";
        case Closeness::ProvedApart: return "apart";
        default: return "undecided";
    }
}

CheckReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (name == "laws") return check_distance_laws(cfg);
    if (name == "limits") return check_limits(cfg);
    if (name == "midpoint") return check_midpoints(cfg);
    if (name == "cuts") return check_cut_agreement(cfg);
    if (name == "models") return check_finite_model_suite(cfg);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(exactreals, m) {
    m.doc() = "Exact real arithmetic: rationals, Cauchy limits, and law checkers.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const py::int_& n, const py::int_& d) {
                 return Rational(to_cpp_int(n), to_cpp_int(d));
             }),
             py::arg("numerator"), py::arg("denominator") = py::int_(1))
        .def(py::init([](const std::string& text) { return Rational::from_string(text); }),
             py::arg("text"))
        .def_property_readonly("numerator",
                               [](const Rational& r) { return to_py_int(r.numerator()); })
        .def_property_readonly("denominator",
                               [](const Rational& r) { return to_py_int(r.denominator()); })
        .def("is_dyadic", &Rational::is_dyadic)
        .def("to_decimal", &Rational::to_decimal, py::arg("digits"))
        .def("__add__", [](const Rational& a, const Rational& b) { return a + b; })
        .def("__sub__", [](const Rational& a, const Rational& b) { return a - b; })
        .def("__mul__", [](const Rational& a, const Rational& b) { return a * b; })
        .def("__truediv__", [](const Rational& a, const Rational& b) { return a / b; })
        .def("__neg__", [](const Rational& a) { return -a; })
        .def("__abs__", [](const Rational& a) { return abs(a); })
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
        .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; })
        .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; })
        .def("__gt__", [](const Rational& a, const Rational& b) { return a > b; })
        .def("__ge__", [](const Rational& a, const Rational& b) { return a >= b; })
        .def("__hash__",
             [](const Rational& r) { return py::hash(py::str(r.to_string())); })
        .def("__str__", &Rational::to_string)
        .def("__repr__",
             [](const Rational& r) { return "Rational('" + r.to_string() + "')"; });
    py::implicitly_convertible<py::int_, Rational>();

    py::class_<Real>(m, "Real")
        .def(
            "approximate",
            [](const Real& u, const Rational& eps) {
                return u.approximate(PositiveRational(eps));
            },
            py::arg("eps"), "Rational within eps of the value; eps must be > 0.")
        .def("__add__", [](const Real& a, const Real& b) { return a + b; })
        .def("__sub__", [](const Real& a, const Real& b) { return a - b; })
        .def("__neg__", [](const Real& a) { return -a; })
        .def("__abs__", [](const Real& a) { return abs(a); });

    py::class_<IntervalHom>(m, "IntervalHom")
        .def(py::init<Real, Real>(), py::arg("a"), py::arg("b"))
        .def("__call__", &IntervalHom::operator(), py::arg("t"),
             "Image of dyadic t in [-1, 1] under the affine map onto [a, b].");

    m.def(
        "rat", [](const Rational& q) { return rat(q); }, py::arg("q"),
        "Embed a rational exactly.");
    m.def(
        "lim",
        [](std::function<Real(const Rational&)> at) {
            return lim(CauchyApproximation(
                [at = std::move(at)](const PositiveRational& eps) {
                    return at(eps.value());
                }));
        },
        py::arg("at"),
        "Limit of a Cauchy family; at(d) and at(e) must be within d + e.");
    m.def(
        "midpoint", [](const Real& u, const Real& v) { return midpoint(u, v); },
        py::arg("u"), py::arg("v"));
    m.def(
        "big_midpoint",
        [](std::function<Real(unsigned)> seq, const Rational& bound) {
            return big_midpoint(std::move(seq), PositiveRational(bound));
        },
        py::arg("seq"), py::arg("bound"),
        "Infinite midpoint tower of a sequence with |seq(i)| <= bound.");
    m.def(
        "dyadic_scale",
        [](const Real& u, const Rational& c) { return dyadic_scale(u, c); },
        py::arg("u"), py::arg("c"), "u * c for dyadic c with |c| <= 1.");

    m.def(
        "close",
        [](const Real& u, const Real& v, const Rational& eps, int budget) {
            ClosenessVerdict cv = close(u, v, PositiveRational(eps), budget);
            return py::make_tuple(closeness_name(cv.outcome), cv.witness_precision);
        },
        py::arg("u"), py::arg("v"), py::arg("eps"), py::arg("budget"),
        "Semi-decide |u - v| < eps: ('close'|'apart'|'undecided', last probe).");
    m.def(
        "eq_check",
        [](const Real& u, const Real& v, unsigned k, int budget) {
            EqVerdict e = eq_check(u, v, k, budget);
            return py::make_tuple(e.consistent, e.epsilon);
        },
        py::arg("u"), py::arg("v"), py::arg("k"), py::arg("budget") = 64,
        "Equality ladder down to 2^-k: (consistent, epsilon).");
    m.def(
        "lt_q",
        [](const Rational& q, const Real& u, int budget) {
            return order_name(lt_q(q, u, budget));
        },
        py::arg("q"), py::arg("u"), py::arg("budget"), "Semi-decide q < u.");
    m.def(
        "lt_q_upper",
        [](const Real& u, const Rational& r, int budget) {
            return order_name(lt_q_upper(u, r, budget));
        },
        py::arg("u"), py::arg("r"), py::arg("budget"), "Semi-decide u < r.");
    m.def(
        "lt_r",
        [](const Real& u, const Real& v, int budget) {
            return order_name(lt_r(u, v, budget));
        },
        py::arg("u"), py::arg("v"), py::arg("budget"), "Semi-decide u < v.");
    m.def(
        "located",
        [](const Rational& q, const Rational& r, const Real& u,
           std::optional<Rational> probe) {
            std::optional<PositiveRational> p;
            if (probe) p.emplace(*probe);
            return located(q, r, u, p) == Side::Left ? "left" : "right";
        },
        py::arg("q"), py::arg("r"), py::arg("u"), py::arg("probe") = py::none(),
        "Total comparison on q < r: 'left' implies q < u, 'right' implies u < r.");
    m.def(
        "rational_bounds",
        [](const Real& u, unsigned n) {
            Bounds b = rational_bounds(u, n);
            return py::make_tuple(b.lower, b.upper);
        },
        py::arg("u"), py::arg("n"),
        "Strict bracket (lower, upper) around u with width < 2^-n.");

    m.def(
        "evaluate",
        [](const std::string& text) { return evaluate(*parse_expression(text)); },
        py::arg("text"), "Parse and build the Real for a calculator expression.");
    m.def(
        "eval_decimal",
        [](const Real& u, unsigned digits) { return eval_decimal(u, digits); },
        py::arg("u"), py::arg("digits"),
        "Decimal string with |printed - u| < 10^-digits.");
    m.def("digits_to_precision", &digits_to_precision, py::arg("digits"));

    m.def(
        "run_check",
        [](const std::string& suite, std::uint64_t seed, int instances) {
            SuiteConfig cfg;
            cfg.seed = seed;
            cfg.instances = instances;
            CheckReport rep = run_suite(suite, cfg);
            std::vector<py::tuple> lines;
            for (const CheckResult& r : rep.results())
                lines.push_back(py::make_tuple(r.name, r.pass, r.witness));
            return lines;
        },
        py::arg("suite"), py::arg("seed") = 20260819, py::arg("instances") = 50,
        "Run a law suite (laws|limits|midpoint|cuts|models); one tuple per law.");
}
