#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pga/algebra.hpp"
#include "pga/duality.hpp"
#include "pga/euclid.hpp"
#include "pga/expr.hpp"
#include "pga/geometry.hpp"
#include "pga/linfunc.hpp"
#include "pga/motions.hpp"
#include "pga/text.hpp"

namespace py = pybind11;
using namespace pga;

namespace {

Side side_of(const std::string& s) {
    if (s == "dual") return Side::Dual;
    if (s == "target") return Side::Target;
    throw Error("side must be 'dual' or 'target'");
}

std::vector<double> coefficients(const Multivector& m) {
    std::vector<double> c(m.size());
    for (int s = 0; s < m.size(); ++s) c[s] = m[Mask(s)];
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Projective geometric algebra kernel";
    py::register_exception<Error>(m, "PgaError", PyExc_ValueError);

    py::class_<Signature>(m, "Signature")
        .def_static("named", &Signature::named, py::arg("metric"), py::arg("n"))
        .def_static("custom", &Signature::custom, py::arg("n"), py::arg("diag"))
        .def_static("names", &Signature::names)
        .def_readonly("n", &Signature::n)
        .def_readonly("name", &Signature::name)
        .def_property_readonly("diag", [](const Signature& s) {
            return std::vector<int>(s.diag.begin(), s.diag.begin() + s.n + 1);
        });

    py::class_<Multivector>(m, "Multivector")
        .def(py::init([](int n, const std::string& side) { return Multivector(n, side_of(side)); }), py::arg("n"),
             py::arg("side") = "dual")
        .def_static(
            "parse", [](const std::string& t, int n, const std::string& side) { return parse_multivector(t, n, side_of(side)); },
            py::arg("text"), py::arg("n"), py::arg("side") = "dual")
        .def_property_readonly("n", &Multivector::n)
        .def_property_readonly("side", [](const Multivector& x) { return x.side() == Side::Dual ? "dual" : "target"; })
        .def("coefficients", &coefficients, "Coefficients indexed by blade bitmask")
        .def("coef", [](const Multivector& x, const std::string& digits) { return label_coef(x, digits); })
        .def("grades", &Multivector::grades, py::arg("tol") = 0.0)
        .def("max_abs", &Multivector::max_abs)
        .def("text", [](const Multivector& x, bool exact) { return to_text(x, {exact, exact ? 0.0 : 1e-12}); },
             py::arg("exact") = false)
        .def("__str__", [](const Multivector& x) { return to_text(x); })
        .def("__repr__", [](const Multivector& x) { return "Multivector('" + to_text(x) + "')"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self * double())
        .def(double() * py::self)
        .def(py::self / double());

    m.def("geometric", &geometric);
    m.def("outer", &outer);
    m.def("inner", &inner);
    m.def("commutator", &commutator);
    m.def("reverse", &reverse);
    m.def("norm", &norm);
    m.def("inverse", [](const Multivector& x, const Signature& s) { return pga::inverse(x, s); });
    m.def("exp", [](const Multivector& x, const Signature& s) { return pga::exp(x, s); });
    m.def("dual", &dual_J);
    m.def("undual", &dual_J_inv);
    m.def("join", &join);
    m.def("approx_equal", &approx_equal, py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);

    m.def("point", [](const std::vector<double>& x, int o, double w) { return point(x, o, w).mv; }, py::arg("coords"),
          py::arg("orientation") = 1, py::arg("weight") = 1.0);
    m.def("hyperplane", [](double d, const std::vector<double>& normal) { return hyperplane(d, normal).mv; });
    m.def("point_coords", &point_coords);
    m.def("classify", [](const Multivector& b) { return kind_name(classify(b)); });
    m.def("is_simple", py::overload_cast<const Multivector&>(&is_simple));
    m.def("central_point", &central_point);
    m.def("normalize", &normalize);

    m.def("distance", &distance);
    m.def("angle", &angle);
    m.def("project", &project);
    m.def("reject", &reject);

    m.def("rotor", &rotor);
    m.def("translator", &translator);
    m.def("apply_motion", &apply_motion, py::arg("s"), py::arg("m"), py::arg("sig"), py::arg("permissive") = false);
    m.def("is_spinor", &is_spinor);
    m.def("motion_kind", [](const Multivector& a, const Signature& s) { return motion_kind_name(classify_motion_E4(a, s)); });

    py::class_<LinFunc>(m, "LinFunc")
        .def_static("from_matrix", [](const Matrix& mat) { return from_matrix(mat); })
        .def("matrix", &matrix_repr)
        .def("apply", [](const LinFunc& f, const Multivector& x) { return apply(f, x); })
        .def("det", &determinant)
        .def("trace", &trace)
        .def("adjoint", &adjoint)
        .def("inverse", [](const LinFunc& f) { return inverse(f); });

    py::class_<Evaluator>(m, "Evaluator")
        .def(py::init<int, const std::string&>(), py::arg("n") = 2, py::arg("metric") = "euclidean")
        .def("run", [](Evaluator& e, const std::string& p) { return format_value(e.run(p)); })
        .def("json", [](Evaluator& e, const std::string& p) { return value_json(e.run(p), e.signature()); });

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& suite, const std::string& dir) {
            py::list out;
            for (const auto& r : run_suite(dir.empty() ? default_fixture_dir() : dir, suite)) {
                py::dict d;
                d["line"] = r.line;
                d["expr"] = r.expr;
                d["expected"] = r.expected;
                d["actual"] = r.actual;
                d["ok"] = r.ok;
                out.append(d);
            }
            return out;
        },
        py::arg("suite"), py::arg("fixture_dir") = "");
}
