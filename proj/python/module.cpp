#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "forestposet/export.hpp"
#include "forestposet/invariants.hpp"
#include "forestposet/order.hpp"
#include "forestposet/recursion.hpp"
#include "forestposet/verify.hpp"

namespace py = pybind11;
using namespace forestposet;

namespace {

py::int_ to_py(const BigInt& value) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(value.str().c_str(), nullptr, 10)));
}

py::object to_py(const nlohmann::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

std::vector<std::vector<std::string>> vertices(const std::vector<VertexId>& vs) {
  return {vs.begin(), vs.end()};
}

py::list univariate(const UnivariatePolynomial& p) {
  py::list out;
  for (int d = 0; d <= p.degree(); ++d) out.append(to_py(p.coefficient(d)));
  return out;
}

py::list bivariate(const BivariatePolynomial& p) {
  py::list out;
  for (const auto& [i, j, c] : p.terms()) out.append(py::make_tuple(i, j, to_py(c)));
  return out;
}

LabelSet label_set(std::vector<std::string> labels) { return make_label_set(std::move(labels)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Intervals of the poset of leaf-labeled rooted binary forests";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NotComparableError>(m, "NotComparableError", PyExc_ValueError);

  m.def("canonical", [](const std::string& text) { return parse_forest(text).text(); },
        py::arg("forest"), "Canonical text of a forest.");
  m.def("leq", [](const std::string& a, const std::string& b) {
    return leq(parse_forest(a), parse_forest(b));
  }, py::arg("lower"), py::arg("upper"));
  m.def("marked_vertices", [](const std::string& a, const std::string& b) {
    return vertices(marked_vertices(parse_forest(a), parse_forest(b)));
  }, py::arg("lower"), py::arg("upper"));

  m.def("exponents", [](const std::string& a, const std::string& b) {
    return exponents(marked_pair(parse_forest(a), parse_forest(b)));
  }, py::arg("lower"), py::arg("upper"));
  m.def("chi", [](const std::string& a, const std::string& b) {
    return univariate(chi_fast(marked_pair(parse_forest(a), parse_forest(b))));
  }, py::arg("lower"), py::arg("upper"), "Coefficients of chi, constant term first.");
  m.def("mobius", [](const std::string& a, const std::string& b) {
    return to_py(mobius_fast(marked_pair(parse_forest(a), parse_forest(b))));
  }, py::arg("lower"), py::arg("upper"));
  m.def("m_poly", [](const std::string& a, const std::string& b) {
    return bivariate(m_fast(marked_pair(parse_forest(a), parse_forest(b))));
  }, py::arg("lower"), py::arg("upper"), "Terms (x_degree, y_degree, coefficient).");
  m.def("z_poly", [](const std::string& a, const std::string& b) {
    return bivariate(z_fast(marked_pair(parse_forest(a), parse_forest(b))));
  }, py::arg("lower"), py::arg("upper"));
  m.def("trace", [](const std::string& a, const std::string& b) {
    return format_trace(decompose(marked_pair(parse_forest(a), parse_forest(b))));
  }, py::arg("lower"), py::arg("upper"));

  m.def("interval", [](const std::string& a, const std::string& b) {
    return to_py(to_json(interval(parse_forest(a), parse_forest(b))));
  }, py::arg("lower"), py::arg("upper"), "Elements, coranks and covers.");
  m.def("brute_chi", [](const std::string& a, const std::string& b) {
    return univariate(characteristic_polynomial(interval(parse_forest(a), parse_forest(b)).order));
  }, py::arg("lower"), py::arg("upper"));
  m.def("hasse_dot", [](const std::string& a, const std::string& b) {
    return to_dot(interval(parse_forest(a), parse_forest(b)));
  }, py::arg("lower"), py::arg("upper"));

  m.def("enumerate_trees", [](std::vector<std::string> labels) {
    std::vector<std::string> out;
    for (const Tree& t : enumerate_trees(label_set(std::move(labels)))) out.push_back(t.text());
    return out;
  }, py::arg("labels"));
  m.def("enumerate_forests", [](std::vector<std::string> labels) {
    std::vector<std::string> out;
    for (const Forest& f : enumerate_forests(label_set(std::move(labels)))) {
      out.push_back(f.text());
    }
    return out;
  }, py::arg("labels"));

  m.def("verify", [](int max_labels, std::uint64_t seed) {
    VerifyOptions options;
    options.max_labels = max_labels;
    options.seed = seed;
    std::vector<CheckResult> results;
    {
      py::gil_scoped_release release;
      results = run_verification(options);
    }
    py::list out;
    for (const auto& r : results) {
      py::dict d;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      d["failures"] = r.failures;
      d["ms"] = r.milliseconds;
      out.append(d);
    }
    return out;
  }, py::arg("max_labels") = 4, py::arg("seed") = 1);
}
