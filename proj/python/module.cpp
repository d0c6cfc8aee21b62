#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "avdc/avd.hpp"
#include "avdc/errors.hpp"
#include "avdc/generators.hpp"
#include "avdc/graph_io.hpp"
#include "avdc/partition.hpp"
#include "avdc/serialize.hpp"
#include "avdc/verify.hpp"

namespace py = pybind11;
using namespace avdc;

namespace {

using Pair = std::pair<int, int>;

Graph make_graph(int n, const std::vector<Pair>& edges) {
  std::vector<EdgeId> ids;
  ids.reserve(edges.size());
  for (auto [u, v] : edges) ids.push_back(EdgeId::make(u, v));
  return Graph(n, ids);
}

std::vector<Pair> pairs(const std::vector<EdgeId>& edges) {
  std::vector<Pair> out;
  out.reserve(edges.size());
  for (const EdgeId& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<std::vector<Pair>> parts_of(const EdgePartition& p) {
  std::vector<std::vector<Pair>> out;
  for (const auto& part : p.parts()) out.push_back(pairs(part));
  return out;
}

GraphFormat format_arg(const std::string& name) {
  auto f = format_from_name(name);
  if (!f) throw PreconditionError("unknown graph format " + name);
  return *f;
}

EdgeColoring coloring_arg(const Graph& g, const std::vector<int>& colors) {
  if (colors.size() != static_cast<std::size_t>(g.edge_count()))
    throw IncompleteColoringError("expected one colour per edge");
  return EdgeColoring(colors);
}

ColorOptions color_options(std::uint64_t seed, std::uint64_t budget_cap) {
  ColorOptions o;
  o.seed = seed;
  if (budget_cap > 0) o.final_cap = budget_cap;
  return o;
}

}  // namespace

PYBIND11_MODULE(_avdc, m) {
  m.doc() = "Adjacent vertex distinguishing edge colouring";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<NotNormalError>(m, "NotNormalError", precondition.ptr());
  py::register_exception<SearchBudgetExhausted>(m, "SearchBudgetExhausted", error.ptr());
  py::register_exception<CounterexampleFound>(m, "CounterexampleFound", error.ptr());
  py::register_exception<InvalidGroupingError>(m, "InvalidGroupingError", error.ptr());
  py::register_exception<IncompleteColoringError>(m, "IncompleteColoringError", error.ptr());
  py::register_exception<ImproperColoringError>(m, "ImproperColoringError", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def_property_readonly("edges", [](const Graph& g) { return pairs(g.edges()); })
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("is_regular", &Graph::is_regular)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" +
               std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_graph", [](const std::string& text, const std::string& format) {
    return parse_graph(text, format_arg(format));
  }, py::arg("text"), py::arg("format"));
  m.def("emit_graph", [](const Graph& g, const std::string& format) {
    return emit_graph(g, format_arg(format));
  }, py::arg("g"), py::arg("format") = "graph6");
  m.def("is_normal", &is_normal);

  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);
  m.def("petersen_graph", &petersen_graph);
  m.def("random_regular_graph", [](int n, int r, std::uint64_t seed) {
    return random_regular_graph(n, r, seed);
  }, py::arg("n"), py::arg("r"), py::arg("seed"));
  m.def("gnp_graph", &gnp_graph, py::arg("n"), py::arg("p"), py::arg("seed"));

  m.def("misra_gries", [](const Graph& g) { return misra_gries(g).colors(); },
        "Colour per edge, in the order of Graph.edges.");

  m.def("partition_p1", [](const Graph& g) { return parts_of(partition_p1(g)); });
  m.def("partition_p2", [](const Graph& g) { return parts_of(partition_p2(g)); });
  m.def("partition_regular", [](const Graph& g) { return parts_of(partition_regular(g)); });

  py::class_<AvdCertificate>(m, "Certificate")
      .def_property_readonly("colors", [](const AvdCertificate& c) { return c.coloring.colors(); })
      .def_readonly("colors_used", &AvdCertificate::colors_used)
      .def_readonly("bound_claimed", &AvdCertificate::bound_claimed)
      .def_readonly("bound_rule", &AvdCertificate::bound_rule)
      .def_property_readonly("witnesses", [](const AvdCertificate& c) {
        std::vector<std::tuple<int, int, int>> out;
        for (const Witness& w : c.witnesses) out.emplace_back(w.edge.u, w.edge.v, w.color);
        return out;
      })
      .def("to_json", [](const AvdCertificate& c, const Graph& g) {
        return certificate_to_json(g, c);
      });

  m.def("avd_color", [](const Graph& g, std::uint64_t seed, std::uint64_t budget_cap) {
    return avd_color(g, color_options(seed, budget_cap));
  }, py::arg("g"), py::arg("seed") = 1, py::arg("budget_cap") = 0);
  m.def("avd_color_regular", [](const Graph& g, std::uint64_t seed, std::uint64_t budget_cap) {
    return avd_color_regular(g, color_options(seed, budget_cap));
  }, py::arg("g"), py::arg("seed") = 1, py::arg("budget_cap") = 0);
  m.def("avd_subcubic", [](const Graph& g) { return avd_subcubic(g); });
  m.def("avd_color_budget", [](const Graph& g, int budget, std::uint64_t node_cap) -> py::object {
    BudgetOutcome out = avd_color_budget(g, budget, {node_cap, 0});
    if (out.status == BudgetStatus::CapExceeded)
      throw SearchBudgetExhausted("node cap reached before the search finished");
    if (out.status == BudgetStatus::Unsatisfiable) return py::none();
    return py::cast(std::move(*out.certificate));
  }, py::arg("g"), py::arg("budget"), py::arg("node_cap") = 0,
     "Certificate, or None when no colouring with `budget` colours exists.");
  m.def("general_bound", &general_bound);
  m.def("regular_bound", &regular_bound);

  m.def("check_proper", [](const Graph& g, const std::vector<int>& colors) {
    return check_proper(g, coloring_arg(g, colors)).ok;
  });
  m.def("check_avd", [](const Graph& g, const std::vector<int>& colors) {
    return check_avd(g, coloring_arg(g, colors)).ok;
  });
  m.def("exact_chi_a", [](const Graph& g, int color_cap, int edge_cap) {
    return exact_chi_a(g, color_cap, edge_cap);
  }, py::arg("g"), py::arg("color_cap") = 0, py::arg("edge_cap") = kDefaultOracleEdgeCap);
  m.def("exact_chromatic_index", &exact_chromatic_index, py::arg("g"),
        py::arg("edge_cap") = kDefaultOracleEdgeCap);
  m.def("_audit_json", [](const Graph& g, int oracle_edge_cap) {
    AuditOptions o;
    o.oracle_edge_cap = oracle_edge_cap;
    return audit_to_json(audit(g, o));
  }, py::arg("g"), py::arg("oracle_edge_cap") = kDefaultOracleEdgeCap);
}
