#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "xhtpy/cli.hpp"
#include "xhtpy/verify.hpp"

namespace py = pybind11;
using namespace xhtpy;

namespace {

Budget make_budget(std::uint64_t search_nodes, std::uint64_t hom_maps) {
  Budget b;
  if (search_nodes) b.search_nodes = search_nodes;
  if (hom_maps) b.hom_maps = hom_maps;
  return b;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph homotopy toolkit core";

  // Translators run newest first, so the subclass is registered last.
  auto& graph_error = py::register_exception<Error>(m, "GraphError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", graph_error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::vector<VertexId> vertices, const std::vector<LabelEdge>& edges) {
             return Graph::make(std::move(vertices), edges);
           }),
           py::arg("vertices"), py::arg("edges") = std::vector<LabelEdge>{})
      .def_property_readonly("vertices", &Graph::labels)
      .def_property_readonly("edges", &Graph::label_edges)
      .def("order", &Graph::order)
      .def("edge_count", &Graph::edge_count)
      .def("looped", [](const Graph& g, const std::string& v) { return g.looped(g.index_of(v)); })
      .def("neighbors", [](const Graph& g, const std::string& v) { return neighbors(g, v); })
      .def("to_json", [](const Graph& g) { return dump(to_json(g)); })
      .def("to_dot", [](const Graph& g, const std::string& name) { return to_dot(g, name); },
           py::arg("name") = "G")
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) +
               " edges=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<GraphMap>(m, "GraphMap")
      .def(py::init([](Graph dom, Graph cod, const std::map<VertexId, VertexId>& images) {
             return GraphMap::from_labels(std::move(dom), std::move(cod), images);
           }),
           py::arg("domain"), py::arg("codomain"), py::arg("images"))
      .def_property_readonly("domain", &GraphMap::domain)
      .def_property_readonly("codomain", &GraphMap::codomain)
      .def("assignment", &GraphMap::assignment)
      .def("injective", &GraphMap::injective)
      .def("__call__", [](const GraphMap& f, const std::string& v) { return f.image(v); })
      .def("__eq__", [](const GraphMap& a, const GraphMap& b) { return a == b; });

  m.def("named_graph", &named_graph);
  m.def("interval", &interval);
  m.def("product", &product);
  m.def("compose", &compose);
  m.def("is_stiff", &is_stiff);
  m.def("foldable_pairs", &foldable_pairs);
  m.def("parse_document", [](const std::string& text) {
    Document doc = parse_document(text);
    py::dict graphs, maps;
    for (const auto& g : doc.graphs) graphs[py::str(g.name)] = g.graph;
    for (const auto& mp : doc.maps) maps[py::str(mp.name)] = mp.map;
    return py::make_tuple(graphs, maps);
  });
  m.def("builtin_data", [](const std::string& name) { return std::string(builtin_data(name)); });

  m.def("stiff_reduction_json",
        [](const Graph& g, const std::string& policy, std::uint64_t seed) {
          if (policy == "random") return dump(to_json(stiff_reduction(g, RandomFold{seed})));
          return dump(to_json(stiff_reduction(g)));
        },
        py::arg("graph"), py::arg("policy") = "first", py::arg("seed") = 0);
  m.def("stiff_graph", [](const Graph& g) { return stiff_reduction(g).result; });
  m.def("is_isomorphic", [](const Graph& a, const Graph& b) -> std::optional<std::map<VertexId, VertexId>> {
    auto iso = is_isomorphic(a, b);
    if (!iso) return std::nullopt;
    return iso->assignment();
  });
  m.def("count_homs", [](const Graph& a, const Graph& b, std::uint64_t nodes) {
    return count_homs(a, b, make_budget(nodes, 0));
  }, py::arg("a"), py::arg("b"), py::arg("budget") = 0);

  m.def("one_step_homotopic", &one_step_homotopic);
  m.def("are_homotopic_json", [](const GraphMap& f, const GraphMap& g) {
    auto cert = are_homotopic(f, g);
    return cert ? dump(to_json(*cert)) : std::string("null");
  });
  m.def("is_equivalence_json", [](const GraphMap& f, std::uint64_t nodes, std::uint64_t maps) {
    return dump(to_json(in_W_times(f, make_budget(nodes, maps))));
  }, py::arg("f"), py::arg("budget") = 0, py::arg("map_budget") = 0);
  m.def("graphs_equivalent", [](const Graph& a, const Graph& b) {
    return graphs_equivalent(a, b).equivalent;
  });

  m.def("in_w_json", [](const GraphMap& f, const std::string& copy_mode, const std::string& image_mode) {
    WSemantics s;
    s.copy = copy_mode == "induced" ? CopyMode::Induced : CopyMode::Subgraph;
    s.image = image_mode == "induced" ? ImageMode::InducedOnImage : ImageMode::ImageSubgraph;
    return dump(to_json(in_W(f, s)));
  }, py::arg("f"), py::arg("copy_mode") = "subgraph", py::arg("image_mode") = "image");

  m.def("pushout_json", [](const GraphMap& f, const GraphMap& g) { return dump(to_json(pushout(f, g))); });
  m.def("pushout_graph", [](const GraphMap& f, const GraphMap& g) { return pushout(f, g).pushout; });
  m.def("mapping_cylinder_json", [](const GraphMap& f) { return dump(to_json(mapping_cylinder(f))); });
  m.def("counterexample_json", [](const GraphMap& f) { return dump(to_json(counterexample_pushout(f))); });

  m.def("verify_suite_json", [](const std::string& suite, std::uint64_t seed) {
    return dump(run_suite(suite, {Budget{}, seed}).to_json());
  }, py::arg("suite") = "all", py::arg("seed") = 0);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
