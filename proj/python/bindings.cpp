#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "copnc/certificate.hpp"
#include "copnc/construct.hpp"
#include "copnc/families.hpp"
#include "copnc/search.hpp"
#include "copnc/switching.hpp"

namespace py = pybind11;
using namespace copnc;

namespace {

py::list triple_list(const Triple& t) {
  py::list out;
  for (const auto& p : t) out.append(p);
  return out;
}

std::vector<NormalPartition> partitions_of(const py::iterable& items) {
  std::vector<NormalPartition> out;
  for (const auto& item : items) out.push_back(item.cast<NormalPartition>());
  return out;
}

Trail make_trail(std::vector<VertexId> vertices, std::vector<EdgeId> edges) {
  return Trail{std::move(vertices), std::move(edges)};
}

MoveKind move_kind(const std::string& name) {
  if (name == "plain") return MoveKind::kPlain;
  if (name == "odd") return MoveKind::kOdd;
  if (name == "conformal") return MoveKind::kConformal;
  throw Error(ErrorKind::kBadParameter, "unknown move kind: " + name);
}

}  // namespace

PYBIND11_MODULE(_copnc, m) {
  m.doc() = "Normal partitions of cubic graphs";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object value = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      value.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error.ptr(), value.ptr());
    }
  });

  py::class_<CubicGraph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
             std::vector<CubicGraph::Endpoints> e(edges.begin(), edges.end());
             return CubicGraph::build(n, e);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &CubicGraph::vertex_count)
      .def_property_readonly("edge_count", &CubicGraph::edge_count)
      .def_property_readonly("edges", &CubicGraph::edges)
      .def("neighbors", &CubicGraph::neighbors)
      .def("edge_between", &CubicGraph::edge_between)
      .def("has_loop", &CubicGraph::has_loop)
      .def("is_simple", &CubicGraph::is_simple)
      .def("graph6", [](const CubicGraph& g) { return to_graph6(g); })
      .def("edge_list", [](const CubicGraph& g) { return to_edge_list(g); })
      .def("__eq__", [](const CubicGraph& a, const CubicGraph& b) { return a == b; })
      .def("__repr__", [](const CubicGraph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + ">";
      });

  py::class_<Trail>(m, "Trail")
      .def(py::init(&make_trail), py::arg("vertices"), py::arg("edges"))
      .def_readonly("vertices", &Trail::vertices)
      .def_readonly("edges", &Trail::edges)
      .def("__len__", &Trail::length);

  py::class_<NormalPartition>(m, "Partition")
      .def_property_readonly("trails", &NormalPartition::trails)
      .def("marked_edge", &NormalPartition::marked_edge)
      .def("max_length", &NormalPartition::max_length)
      .def("is_odd", [](const NormalPartition& p) { return is_odd(p); })
      .def("matching", [](const NormalPartition& p) { return associated_matching(p); })
      .def("is_conformal", [](const NormalPartition& p, const PerfectMatching& mt) { return is_conformal(p, mt); })
      .def("compatible_with", [](const NormalPartition& a, const NormalPartition& b) { return are_compatible(a, b); })
      .def("__len__", &NormalPartition::size)
      .def("__eq__", [](const NormalPartition& a, const NormalPartition& b) { return a == b; });

  m.def("generate", &generate, py::arg("family"), py::arg("k") = py::none());
  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); });
  m.def("resolve_graph", [](const std::string& s) { return resolve_graph(s); });
  m.def("is_bridgeless", &is_bridgeless);
  m.def("is_bipartite", &is_bipartite);
  m.def("chromatic_index", &chromatic_index);
  m.def("perfect_matchings", &perfect_matchings);
  m.def("edge_coloring", [](const CubicGraph& g) -> std::optional<std::vector<int>> {
    const auto c = proper_3_edge_coloring(g);
    if (!c) return std::nullopt;
    std::vector<int> out;
    for (Color x : *c) out.push_back(static_cast<int>(x));
    return out;
  });

  m.def("make_partition", [](const CubicGraph& g, std::vector<Trail> trails) {
    return make_partition(g, std::move(trails));
  });
  m.def(
      "validate",
      [](const CubicGraph& g, std::vector<Trail> trails) {
        std::vector<std::string> out;
        for (const Diagnostic& d : validate_normal(g, std::move(trails)).diagnostics) out.push_back(d.message);
        return out;
      },
      "Violation messages; empty when the trails form a normal partition.");
  m.def(
      "from_matching",
      [](const CubicGraph& g, std::optional<PerfectMatching> mt) {
        return mt ? nop_from_matching(g, *mt) : nop_from_matching(g);
      },
      py::arg("graph"), py::arg("matching") = py::none());

  m.def("bipartite_triple", [](const CubicGraph& g) { return triple_list(bipartite_triple(g).partitions); });
  m.def(
      "conformal_triple",
      [](const CubicGraph& g, std::uint64_t seed) {
        ConformalOptions options;
        options.seed = seed;
        return triple_list(conformal_triple_general(g, options).partitions);
      },
      py::arg("graph"), py::arg("seed") = 0);
  m.def(
      "find_triple",
      [](const CubicGraph& g, std::optional<std::size_t> max_length,
         std::optional<std::uint64_t> node_limit) -> py::object {
        TripleOptions options;
        options.max_length = max_length;
        options.node_limit = node_limit;
        const auto t = find_compatible_triple(g, options);
        if (!t) return py::none();
        return triple_list(*t);
      },
      py::arg("graph"), py::arg("max_length") = py::none(), py::arg("node_limit") = py::none());

  m.def("petersen_triple", []() { return triple_list(petersen_triple()); });
  m.def("flower_triple", [](int k) { return triple_list(flower_triple(k)); });
  m.def("goldberg_triple", [](int k) { return triple_list(goldberg_triple(k)); });

  m.def(
      "switch_class",
      [](const CubicGraph& g, const NormalPartition& start, const std::string& moves,
         std::optional<PerfectMatching> matching, std::size_t cap) {
        const SwitchClass c = switch_class(g, start, move_kind(moves), matching ? &*matching : nullptr, cap);
        return py::make_tuple(c.members, c.diameter);
      },
      py::arg("graph"), py::arg("start"), py::arg("moves") = "odd", py::arg("matching") = py::none(),
      py::arg("cap") = 100000);

  m.def("certificate_json", [](const CubicGraph& g, const py::iterable& parts) {
    return certificate_json(g, partitions_of(parts));
  });
  m.def(
      "check_certificate",
      [](const std::string& text, const CubicGraph* expected) {
        const CertificateReport r = check_certificate(parse_certificate(text), expected);
        return py::make_tuple(r.ok, r.json);
      },
      py::arg("text"), py::arg("expected") = nullptr);
}
