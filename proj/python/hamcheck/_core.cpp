#include "hamcheck/cli.hpp"
#include "hamcheck/compat.hpp"
#include "hamcheck/corpus.hpp"
#include "hamcheck/covering.hpp"
#include "hamcheck/operators.hpp"
#include "hamcheck/parser.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace hamcheck;

namespace {

ConditionForm form_of(const std::string& s)
{
    auto f = parse_form(s);
    if (!f) {
        throw py::value_error("form must be 'verbatim' or 'corrected', got '" + s + "'");
    }
    return *f;
}

// Residual as {one-based index tuple: printed value}, nonzero entries only.
py::dict residual_dict(const Tensor& t)
{
    py::dict d;
    for (const auto& [idx, value] : t.nonzero_entries()) {
        py::tuple key(idx.size());
        for (std::size_t k = 0; k < idx.size(); ++k) {
            key[k] = idx[k] + 1;
        }
        d[key] = value.to_string();
    }
    return d;
}

ReportSet oracle_set(const ProblemInstance& p)
{
    OracleResidual r = oracle(p.system, p.op);
    ReportSet set;
    set.title = "covering oracle";
    for (const auto& [name, t] : r.classes) {
        set.reports.push_back({"oracle." + name, "coefficient of " + name, t, {}});
    }
    return set;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact checks for Hamiltonian operators and quasilinear systems";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
    py::register_exception<Degenerate>(m, "Degenerate", base);
    py::register_exception<PreconditionViolation>(m, "PreconditionViolation", base);
    py::register_exception<LoadError>(m, "LoadError", base);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<RationalExpr>(m, "Expr")
        .def(py::init([](const std::string& text, int dimension, std::vector<std::string> parameters) {
                 ParseContext c;
                 c.dimension = dimension;
                 c.parameters = std::move(parameters);
                 return parse_expr(text, c);
             }),
             py::arg("text"), py::arg("dimension"), py::arg("parameters") = std::vector<std::string>{})
        .def("is_zero", &RationalExpr::is_zero)
        .def("diff", [](const RationalExpr& e, int i) { return e.diff(Symbol::u(i)); }, py::arg("field"),
             "Partial derivative in u<field> (one-based).")
        .def("substitute",
             [](const RationalExpr& e, const std::map<int, RationalExpr>& values) {
                 std::map<Symbol, RationalExpr> b;
                 for (const auto& [i, v] : values) {
                     b.emplace(Symbol::u(i), v);
                 }
                 return e.substitute(b);
             })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def("__truediv__",
             [](const RationalExpr& a, const RationalExpr& b) {
                 if (b.is_zero()) {
                     throw py::value_error("division by zero expression");
                 }
                 return a / b;
             })
        .def(-py::self)
        .def(py::self == py::self)
        .def("__hash__", [](const RationalExpr& e) { return py::hash(py::str(e.to_string())); })
        .def("__str__", &RationalExpr::to_string)
        .def("__repr__", [](const RationalExpr& e) { return "Expr('" + e.to_string() + "')"; });

    py::class_<ConditionReport>(m, "Condition")
        .def_readonly("id", &ConditionReport::id)
        .def_readonly("description", &ConditionReport::description)
        .def_readonly("notes", &ConditionReport::notes)
        .def_property_readonly("passed", &ConditionReport::pass)
        .def_property_readonly("residual", [](const ConditionReport& r) { return residual_dict(r.residual); })
        .def("__repr__", [](const ConditionReport& r) {
            return "<Condition " + r.id + (r.pass() ? " pass>" : " fail>");
        });

    py::class_<ReportSet>(m, "ReportSet")
        .def_readonly("title", &ReportSet::title)
        .def_readonly("conditions", &ReportSet::reports)
        .def_readonly("notes", &ReportSet::notes)
        .def_readonly("operator_hamiltonian", &ReportSet::operator_hamiltonian)
        .def_property_readonly("passed", &ReportSet::all_pass)
        .def("__getitem__", [](const ReportSet& s, const std::string& id) {
            const ConditionReport* r = s.find(id);
            if (!r) {
                throw py::key_error(id);
            }
            return *r;
        })
        .def("__len__", [](const ReportSet& s) { return s.reports.size(); });

    py::class_<ProblemInstance>(m, "Problem")
        .def_static("builtin", &builtin, py::arg("name"))
        .def_static("load", &load, py::arg("path"))
        .def_static("from_json", &parse_problem, py::arg("text"))
        .def("to_json", &serialize_problem)
        .def("save", [](const ProblemInstance& p, const std::filesystem::path& path) { save(p, path); })
        .def_readonly("name", &ProblemInstance::name)
        .def_readonly("parameters", &ProblemInstance::parameters)
        .def_readonly("expected", &ProblemInstance::expected)
        .def_property_readonly("dimension", [](const ProblemInstance& p) { return p.system.n; })
        .def(py::self == py::self)
        .def("__repr__", [](const ProblemInstance& p) { return "<Problem " + p.name + ">"; });

    m.def("builtin_names", &builtin_names);
    m.def(
        "check_operator",
        [](const ProblemInstance& p, const std::string& form) {
            std::vector<ReportSet> out{check_nonhomogeneous_hamiltonian(p.op, form_of(form))};
            if (!det(p.op.first.g).is_zero()) {
                out.push_back(check_ferapontov_mokhov(p.op));
            }
            return out;
        },
        py::arg("problem"), py::arg("form") = "verbatim");
    m.def(
        "check_compat", [](const ProblemInstance& p, const std::string& form) { return check_compat(p.system, p.op, form_of(form)); },
        py::arg("problem"), py::arg("form") = "verbatim");
    m.def("oracle", &oracle_set, py::arg("problem"));
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool in process; returns (exit code, stdout, stderr).");
}
