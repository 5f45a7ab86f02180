#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>

#include "forestf/census.hpp"
#include "forestf/errors.hpp"
#include "forestf/metric.hpp"
#include "forestf/plmap.hpp"
#include "forestf/render.hpp"
#include "forestf/word.hpp"

namespace py = pybind11;
using namespace forestf;

namespace {

Gen parse_generator(const std::string& s) {
  if (s == "x0") return Gen::x0;
  if (s == "x0^-1") return Gen::x0_inv;
  if (s == "x1") return Gen::x1;
  if (s == "x1^-1") return Gen::x1_inv;
  throw PreconditionError("unknown generator: " + s);
}

BallBudget make_budget(int max_radius, std::size_t max_elements) {
  BallBudget b;
  b.max_radius = max_radius;
  b.max_elements = max_elements;
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact engine for Thompson's group F over the {x0, x1} generating set";

  py::register_exception<ParseError>(m, "WordParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<ForestDiagram>(m, "Diagram")
      .def(py::init([](const std::string& text) { return parse_diagram(text); }),
           py::arg("text"))
      .def("__str__", [](const ForestDiagram& f) { return serialize(f); })
      .def("__repr__",
           [](const ForestDiagram& f) { return "Diagram(\"" + serialize(f.top) + " / " +
                                               serialize(f.bottom) + "\")"; })
      .def("__eq__", [](const ForestDiagram& a, const ForestDiagram& b) { return equals(a, b); })
      .def("__hash__",
           [](const ForestDiagram& f) { return py::hash(py::str(serialize(f))); })
      .def("__mul__", &multiply)
      .def("inverse", [](const ForestDiagram& f) { return invert(f); })
      .def("is_positive", &is_positive)
      .def("is_strongly_positive", &is_strongly_positive)
      .def("length",
           [](const ForestDiagram& f) {
             LengthBreakdown lb = length(f);
             return py::make_tuple(lb.total(), lb.ell0, lb.ell1);
           },
           "Word length as (total, l0, l1)")
      .def("normal_form", [](const ForestDiagram& f) { return format_word(normal_form(f)); })
      .def("anti_normal_form",
           [](const ForestDiagram& f) { return format_word(anti_normal_form(f)); })
      .def("min_word",
           [](const ForestDiagram& f) { return format_word(minimum_length_word(f)); })
      .def("is_dead_end", &is_dead_end)
      .def("render", &render_ascii)
      .def("split",
           [](const ForestDiagram& f) {
             auto [pos, neg] = positive_negative_split(f);
             return py::make_tuple(pos, neg);
           })
      .def("plmap",
           [](const ForestDiagram& f) { return format_plmap(to_plmap(f)); },
           "Breakpoint table of the piecewise-linear map");

  m.def("identity", &identity);
  m.def("evaluate", [](const std::string& word) { return evaluate(word); }, py::arg("word"));
  m.def("apply", [](const std::string& gen, const ForestDiagram& f) {
    return apply_generator(parse_generator(gen), f);
  });
  m.def("predict_delta", [](const std::string& gen, const ForestDiagram& f) {
    return predict_delta(parse_generator(gen), f);
  });
  m.def("x0x1_length",
        [](const std::string& word) { return x0x1_length_of_general_word(parse_word(word)); });
  m.def("rewrite_to_anti_normal", [](const std::string& word) {
    RewriteResult r = rewrite_to_anti_normal(parse_word(word));
    return py::make_tuple(format_word(r.word), r.steps);
  });
  m.def(
      "sphere_sizes",
      [](int radius, std::size_t max_elements) {
        return bfs_ball(radius, make_budget(radius, max_elements)).sphere_sizes();
      },
      py::arg("radius"), py::arg("max_elements") = 10'000'000);
  m.def(
      "growth_series",
      [](int max_len, std::size_t max_elements) {
        return py::make_tuple(positive_growth_series(max_len, make_budget(max_len, max_elements)),
                              growth_reference_series(max_len));
      },
      py::arg("max_len"), py::arg("max_elements") = 10'000'000,
      "Enumerated and reference growth series of the positive monoid");
  m.def("iso_ratio", [](int width, int height) {
    IsoResult r = iso_ratio(width, height);
    return py::make_tuple(r.boundary_edges, r.set_size);
  });
  m.def(
      "dead_end_counts",
      [](int radius) {
        Ball ball = bfs_ball(radius, make_budget(radius, 10'000'000));
        return dead_end_census(ball).counts_by_length;
      },
      py::arg("radius"));
}
