#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dforge/combine.hpp"
#include "dforge/construct.hpp"
#include "dforge/errors.hpp"
#include "dforge/parse.hpp"
#include "dforge/verify.hpp"

namespace py = pybind11;
using namespace dforge;

// Integers cross the boundary as strings; the Python layer converts. Values
// that can be huge go out in hex, since Python caps decimal conversion.
namespace {

std::string hex(const BigInt& v) { return v.get_str(16); }

BigInt big(const std::string& s) {
  BigInt v;
  if (v.set_str(s, 10) != 0) throw DomainError("not an integer: " + s);
  return v;
}

Point point(const std::map<std::string, std::string>& at) {
  Point out;
  for (const auto& [k, v] : at) out[k] = big(v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.def("parse_poly", [](const std::string& text) { return to_string(parse_poly(text)); });
  m.def("poly_json", [](const std::string& text) { return to_json(parse_poly(text)).dump(); });
  m.def("eta", [](std::uint64_t nu, std::uint64_t delta) { return to_decimal(construct::eta(nu, delta)); });
  m.def("universal_pair", [](std::uint64_t nu, std::uint64_t delta) {
    return construct::universal_pair(nu, delta).to_string();
  });
  m.def("three_squares", [](const std::string& n) {
    construct::ThreeSquares t = construct::three_squares(big(n));
    return std::vector<std::string>{to_decimal(t.x), to_decimal(t.y), to_decimal(t.z)};
  });
  m.def("degree_report", [](const std::string& text) { return construct::degree_report(parse_poly(text)).dump(); });
  m.def("construct", [](const std::string& text) { return to_json(construct::build_Q_tilde(parse_poly(text))).dump(); });
  m.def("degree_q_tilde", [](const std::string& text) {
    return to_decimal(expr_degree(construct::build_Q_tilde(parse_poly(text))));
  });
  m.def(
      "eval_q_tilde",
      [](const std::string& text, const std::map<std::string, std::string>& at) {
        PolyExpr q = construct::build_Q_tilde(parse_poly(text));
        Point pt = point(at);
        py::gil_scoped_release release;
        return hex(expr_evaluate(q, pt));
      });
  m.def("m_q_eval", [](std::size_t q, const std::vector<std::string>& A, const std::string& S, const std::string& T,
                       const std::string& R, const std::string& n) {
    std::vector<BigInt> a;
    for (const auto& s : A) a.push_back(big(s));
    return hex(combine::m_q_eval(q, a, big(S), big(T), big(R), big(n)));
  });
  m.def("suite_names", &verify::suite_names);
  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, std::optional<std::uint64_t> max) {
        verify::SuiteOptions options;
        options.seed = seed;
        options.max = max;
        py::gil_scoped_release release;
        return verify::run_suite(suite, options).to_json().dump();
      },
      py::arg("suite"), py::arg("seed") = 1, py::arg("max") = py::none());
}
