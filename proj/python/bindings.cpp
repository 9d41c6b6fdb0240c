#include "gbsknot/classifier.hpp"
#include "gbsknot/cli.hpp"
#include "gbsknot/dsl.hpp"
#include "gbsknot/error.hpp"
#include "gbsknot/moves.hpp"
#include "gbsknot/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace gbsknot;

namespace {

py::int_ to_py(const Integer& value) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(to_string(value).c_str(), nullptr, 10));
}

Integer from_py(const py::int_& value) {
  const auto parsed = parse_integer(std::string(py::str(value)));
  if (!parsed) throw py::value_error("not an integer");
  return *parsed;
}

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::tuple abelian_tuple(const AbelianStructure& ab) {
  py::list torsion;
  for (const auto& d : ab.torsion) torsion.append(to_py(d));
  return py::make_tuple(ab.free_rank, torsion);
}

std::vector<Word> parse_words(const std::vector<std::string>& words) {
  std::vector<Word> out;
  for (const auto& w : words) out.push_back(Word::parse(w));
  return out;
}

}  // namespace

PYBIND11_MODULE(_gbsknot, m) {
  m.doc() = "Knot-group recognition for GBS groups given as labeled graphs";

  // Created once and kept for the life of the process.
  static PyObject* const error =
      PyErr_NewException("gbsknot.GbsError", PyExc_ValueError, nullptr);
  static PyObject* const parse_error = PyErr_NewException("gbsknot.ParseError", error, nullptr);
  m.attr("GbsError") = py::handle(error);
  m.attr("ParseError") = py::handle(parse_error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      const py::tuple args =
          py::make_tuple(e.what(), std::string(name(e.code())), e.line(), e.column());
      PyErr_SetObject(parse_error, args.ptr());
    } catch (const Error& e) {
      const py::tuple args = py::make_tuple(e.what(), std::string(name(e.code())), e.element());
      PyErr_SetObject(error, args.ptr());
    }
  });

  py::class_<LabeledGraph>(m, "Graph")
      .def_static("parse", &parse_graph, py::arg("text"))
      .def_static("from_file", [](const std::string& path) { return parse_graph_file(path); })
      .def_static(
          "from_edges",
          [](const std::vector<std::tuple<std::string, std::string, py::int_, std::string, py::int_>>&
                 edges,
             const std::vector<std::string>& vertices) {
            GraphDescription d;
            d.vertices = vertices;
            for (const auto& [id, a, la, b, lb] : edges) {
              d.edges.push_back(Edge{id, a, b, from_py(la), from_py(lb)});
            }
            return LabeledGraph::validate(std::move(d));
          },
          py::arg("edges"), py::arg("vertices") = std::vector<std::string>{})
      .def_property_readonly("vertices", &LabeledGraph::vertices)
      .def_property_readonly("edges",
                             [](const LabeledGraph& g) {
                               py::list out;
                               for (const auto& e : g.edges()) {
                                 out.append(py::make_tuple(e.id, e.source, to_py(e.source_label),
                                                           e.target, to_py(e.target_label)));
                               }
                               return out;
                             })
      .def("serialize", &serialize_graph)
      .def("betti1", &betti1)
      .def("is_reduced", &is_reduced)
      .def("reduce", [](const LabeledGraph& g) { return reduce(g); })
      .def("collapse", [](const LabeledGraph& g, const std::string& e) { return collapse(g, e); })
      .def("expand",
           [](const LabeledGraph& g, const std::string& e, int end, py::int_ m, py::int_ n) {
             return expand(g, e, end, from_py(m), from_py(n));
           })
      .def("shape", [](const LabeledGraph& g) { return json_to_py(to_json(shape(g))); })
      .def("spanning_tree", [](const LabeledGraph& g) { return spanning_tree(g).edge_ids(); })
      .def("__eq__", [](const LabeledGraph& a, const LabeledGraph& b) { return a == b; })
      .def("__repr__", [](const LabeledGraph& g) {
        return "<Graph " + std::to_string(g.vertices().size()) + " vertices, " +
               std::to_string(g.edges().size()) + " edges>";
      });

  m.def("presentation", [](const LabeledGraph& g) { return json_to_py(to_json(build_presentation(g))); });
  m.def("abelianization", [](const LabeledGraph& g) { return abelian_tuple(abelianization(g)); });
  m.def(
      "quotient_abelianization",
      [](const LabeledGraph& g, const std::vector<std::string>& kill) {
        return abelian_tuple(quotient_abelianization(build_presentation(g), parse_words(kill)));
      },
      py::arg("graph"), py::arg("kill"));
  m.def("modular_image", [](const LabeledGraph& g) { return json_to_py(to_json(modular_image(g))); });

  m.def("normal_form", [](const LabeledGraph& g, const std::string& w) {
    return WordEngine(g, WordEngineOptions::from_environment()).normal_form(Word::parse(w)).to_string();
  });
  m.def("is_identity", [](const LabeledGraph& g, const std::string& w) {
    return WordEngine(g, WordEngineOptions::from_environment()).is_identity(Word::parse(w));
  });
  m.def("equal", [](const LabeledGraph& g, const std::string& a, const std::string& b) {
    return WordEngine(g, WordEngineOptions::from_environment()).equal(Word::parse(a), Word::parse(b));
  });
  m.def("is_elliptic", [](const LabeledGraph& g, const std::string& w) {
    return WordEngine(g, WordEngineOptions::from_environment()).is_elliptic(Word::parse(w));
  });

  m.def(
      "classify",
      [](const LabeledGraph& g) {
        const KnotVerdict v = classify(g, {WordEngineOptions::from_environment()});
        return json_to_py(report(serialize_graph(g), v));
      },
      "Full report as a dict; `input` holds the serialized graph.");
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line front end; returns (exit code, stdout, stderr).");
}
