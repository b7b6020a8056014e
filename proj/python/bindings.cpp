#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hilburch/cells.hpp"
#include "hilburch/cli.hpp"
#include "hilburch/errors.hpp"
#include "hilburch/gorenstein.hpp"
#include "hilburch/hbm.hpp"
#include "hilburch/localstd.hpp"
#include "hilburch/parse.hpp"

namespace py = pybind11;
using namespace hilburch;

namespace {

// 0 means the rationals.
Field field_of(std::uint64_t p) { return p ? Field::prime(p) : Field::rationals(); }

std::vector<std::string> printed(const std::vector<BiPoly>& v) {
  std::vector<std::string> s;
  for (const auto& f : v) s.push_back(to_string(f));
  return s;
}

py::dict canonical(const std::string& gens, std::uint64_t p) {
  CanonicalResult r = canonical_deformation(parse_ideal(gens, field_of(p)));
  py::dict d;
  d["staircase"] = r.N0.E();
  d["matrix"] = render_matrix(r.N0);
  d["moves"] = r.moves;
  if (r.point) {
    std::vector<std::string> c;
    for (const auto& s : r.point->coords) c.push_back(s.to_string());
    d["point"] = c;
  } else {
    d["point"] = py::none();
  }
  return d;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_hilburch, m) {
  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<BudgetError>(m, "BudgetError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Staircase>(m, "Staircase")
      .def(py::init<std::vector<int>>(), py::arg("m"))
      .def_static("parse", &parse_staircase)
      .def_property_readonly("t", &Staircase::t)
      .def_property_readonly("m", py::overload_cast<>(&Staircase::m, py::const_))
      .def_property_readonly("colength", &Staircase::colength)
      .def_property_readonly("socle_degree", &Staircase::socle_degree)
      .def_property_readonly("hilbert_function", &Staircase::hilbert_function)
      .def_property_readonly("ideal", &Staircase::ideal_string)
      .def("u", &Staircase::u)
      .def("dimension", &cell_dimension)
      .def("coordinates",
           [](const Staircase& e) {
             std::vector<std::string> names;
             for (const auto& s : cell_template(e)) names.push_back(s.name());
             return names;
           })
      .def("__eq__", [](const Staircase& a, const Staircase& b) { return a == b; })
      .def("__hash__", [](const Staircase& e) { return py::hash(py::tuple(py::cast(e.m()))); })
      .def("__str__", &Staircase::to_string)
      .def("__repr__", [](const Staircase& e) { return "Staircase(" + e.to_string() + ")"; });

  m.def("staircases", &enumerate_staircases, py::arg("colength"));
  m.def("lex_segment", &lex_segment_of, py::arg("hilbert_function"));

  m.def(
      "lt",
      [](const std::string& gens, std::uint64_t p) {
        return lt_ideal_local(parse_ideal(gens, field_of(p))).E;
      },
      py::arg("gens"), py::arg("p") = 0);
  m.def(
      "standard_basis",
      [](const std::string& gens, std::uint64_t p) {
        return printed(reduced_standard_basis(parse_ideal(gens, field_of(p))).elements);
      },
      py::arg("gens"), py::arg("p") = 0);
  m.def(
      "minimal_generators",
      [](const std::string& gens, std::uint64_t p) {
        return printed(minimal_generators(parse_ideal(gens, field_of(p))));
      },
      py::arg("gens"), py::arg("p") = 0);
  m.def(
      "is_member",
      [](const std::string& gens, const Staircase& e, std::uint64_t p) {
        return membership(parse_ideal(gens, field_of(p)), e);
      },
      py::arg("gens"), py::arg("staircase"), py::arg("p") = 0);
  m.def(
      "same_ideal",
      [](const std::string& a, const std::string& b, std::uint64_t p) {
        return same_ideal(parse_ideal(a, field_of(p)), parse_ideal(b, field_of(p)));
      },
      py::arg("a"), py::arg("b"), py::arg("p") = 0);
  m.def("canonical", &canonical, py::arg("gens"), py::arg("p") = 0);
  m.def(
      "phi",
      [](const Staircase& e, const std::string& point, std::uint64_t p) {
        return printed(phi(decode_cellpoint(parse_cellpoint(e, point, field_of(p)))).gens);
      },
      py::arg("staircase"), py::arg("point"), py::arg("p") = 0);
  m.def("run", &run_cli, py::arg("args"));
}
