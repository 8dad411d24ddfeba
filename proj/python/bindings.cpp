#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ordcx/cli.hpp"
#include "ordcx/counterexamples.hpp"
#include "ordcx/diffcheck.hpp"
#include "ordcx/errors.hpp"
#include "ordcx/literal.hpp"

namespace py = pybind11;
using namespace ordcx;
using namespace pybind11::literals;

namespace {

std::vector<double> coords(const RealElement& x) {
  std::vector<double> out(x.model().dimension());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = x[k];
  return out;
}

std::vector<Complex> coords(const ComplexElement& z) {
  std::vector<Complex> out(z.model().dimension());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = z[k];
  return out;
}

std::vector<double> coords(const ExtendedPositive& u) {
  std::vector<double> out(u.dimension());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = u[k];
  return out;
}

ComplexElement point(const std::vector<Complex>& z) { return ComplexElement::finite(z); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Order-complete lattice calculus in finite and sequence models";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<OutsideDomain>(m, "OutsideDomain", PyExc_ArithmeticError);
  py::register_exception<OutsideOpenDisk>(m, "OutsideOpenDisk", PyExc_ArithmeticError);
  py::register_exception<InvalidRadius>(m, "InvalidRadius", PyExc_ValueError);
  py::register_exception<ModelMismatch>(m, "ModelMismatch", PyExc_ValueError);

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run a command-line invocation; returns (exit code, stdout, stderr).");

  m.def("decompose", [](const std::string& literal) {
    const auto u = parse_extended(literal);
    return py::dict("finite"_a = coords(finite_part(u)), "infinite"_a = coords(infinite_part(u)));
  }, py::arg("literal"));

  m.def("radius", [](const std::string& family_text) {
    const auto rep = cauchy_hadamard(parse_family(family_text));
    return py::dict("L"_a = coords(rep.L), "rho"_a = coords(rep.rho), "identities"_a = rep.identities_hold());
  }, py::arg("family_text"));

  m.def("derivative", [](const std::string& expr) { return to_string(symbolic_derivative(parse_expr(expr))); },
        py::arg("expr"));

  m.def("evaluate", [](const std::string& expr, const std::vector<Complex>& z) {
    return coords(eval(parse_expr(expr), point(z)));
  }, py::arg("expr"), py::arg("z"));

  m.def("diff_check", [](const std::string& expr, const std::vector<Complex>& c, unsigned depth, double tol) {
    const auto rep = difference_quotient_check(parse_expr(expr), point(c), std::nullopt, depth, tol);
    return py::dict("passed"_a = rep.pass(), "derivative"_a = coords(rep.derivative),
                    "worst_final"_a = coords(rep.worst_final), "failure"_a = rep.failure);
  }, py::arg("expr"), py::arg("c"), py::arg("depth") = kDefaultCheckDepth, py::arg("tol") = kDefaultCheckTolerance);

  m.def("series", [](const std::string& family_text, const std::vector<Complex>& c, const std::vector<Complex>& z) {
    const auto v = evaluate_series(parse_family(family_text), point(c), point(z));
    py::object value = py::none();
    if (v.verdict.membership == Membership::In) value = py::cast(coords(v.value));
    return py::dict("membership"_a = to_string(v.verdict.membership), "value"_a = value, "terms"_a = v.terms);
  }, py::arg("family_text"), py::arg("c"), py::arg("z"));

  m.def("series_check", [](const std::string& family_text, const std::vector<Complex>& c,
                           const std::vector<Complex>& z) {
    const auto rep = series_derivative_check(parse_family(family_text), point(c), point(z));
    return py::dict("passed"_a = rep.pass(), "value"_a = coords(rep.f_value), "derivative"_a = coords(rep.g_value),
                    "bound_ok"_a = rep.bound_ok);
  }, py::arg("family_text"), py::arg("c"), py::arg("z"));

  m.def("counterexamples", [](const std::string& name) {
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& r : run_counterexamples(name)) out.emplace_back(r.name, r.reproduced);
    return out;
  }, py::arg("name") = "all");
}
