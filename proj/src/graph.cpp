#include "avdc/graph.hpp"

#include <algorithm>
#include <string>

#include "avdc/errors.hpp"

namespace avdc {

Graph::Graph(int vertex_count, std::span<const EdgeId> edges) {
  if (vertex_count < 0) throw ParseError("negative vertex count");
  adjacency_.resize(vertex_count);
  edges_.reserve(edges.size());
  for (const EdgeId& raw : edges) {
    if (raw.u == raw.v)
      throw ParseError("self-loop at vertex " + std::to_string(raw.u));
    EdgeId e = EdgeId::make(raw.u, raw.v);
    if (e.u < 0 || e.v >= vertex_count)
      throw ParseError("vertex index out of range in edge (" + std::to_string(raw.u) +
                       ", " + std::to_string(raw.v) + ")");
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw ParseError("duplicate edge (" + std::to_string(dup->u) + ", " +
                     std::to_string(dup->v) + ")");
  for (EdgeIndex i = 0; i < edge_count(); ++i) {
    adjacency_[edges_[i].u].push_back({edges_[i].v, i});
    adjacency_[edges_[i].v].push_back({edges_[i].u, i});
  }
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end(),
              [](const Incidence& a, const Incidence& b) { return a.vertex < b.vertex; });
    max_degree_ = std::max(max_degree_, static_cast<int>(row.size()));
  }
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edges)
    : Graph(vertex_count, [&] {
        std::vector<EdgeId> list;
        for (auto [a, b] : edges) list.push_back({a, b});
        return list;
      }()) {}

int Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  int d = degree(0);
  for (Vertex v = 1; v < vertex_count(); ++v) d = std::min(d, degree(v));
  return d;
}

std::optional<EdgeIndex> Graph::find_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) return std::nullopt;
  const auto& row = adjacency_[a];
  auto it = std::lower_bound(row.begin(), row.end(), b,
                             [](const Incidence& x, Vertex key) { return x.vertex < key; });
  if (it == row.end() || it->vertex != b) return std::nullopt;
  return it->edge;
}

EdgeIndex Graph::edge_index(const EdgeId& e) const {
  auto idx = find_edge(e.u, e.v);
  if (!idx)
    throw PreconditionError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                            ") is not in the graph");
  return *idx;
}

bool Graph::is_regular() const {
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (degree(v) != max_degree_) return false;
  return true;
}

EdgeId InducedSubgraph::host_edge(EdgeIndex e) const {
  const EdgeId& local = graph.edge(e);
  return EdgeId::make(to_host_vertex[local.u], to_host_vertex[local.v]);
}

InducedSubgraph edge_induced(const Graph& g, std::span<const EdgeIndex> edges) {
  InducedSubgraph out;
  std::vector<EdgeIndex> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<char> touched(g.vertex_count(), 0);
  for (EdgeIndex e : sorted) {
    if (e < 0 || e >= g.edge_count()) throw PreconditionError("edge index out of range");
    touched[g.edge(e).u] = touched[g.edge(e).v] = 1;
  }
  std::vector<Vertex> local(g.vertex_count(), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!touched[v]) continue;
    local[v] = static_cast<Vertex>(out.to_host_vertex.size());
    out.to_host_vertex.push_back(v);
  }
  std::vector<EdgeId> local_edges;
  local_edges.reserve(sorted.size());
  for (EdgeIndex e : sorted) local_edges.push_back({local[g.edge(e).u], local[g.edge(e).v]});
  out.graph = Graph(static_cast<int>(out.to_host_vertex.size()), local_edges);
  // Relabelling is monotone, so local edge order equals host edge order.
  out.to_host_edge = std::move(sorted);
  return out;
}

InducedSubgraph edge_induced(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<EdgeIndex> idx;
  idx.reserve(edges.size());
  for (const EdgeId& e : edges) idx.push_back(g.edge_index(e));
  return edge_induced(g, std::span<const EdgeIndex>(idx));
}

bool is_normal(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) return false;
  for (const EdgeId& e : g.edges())
    if (g.degree(e.u) == 1 && g.degree(e.v) == 1) return false;
  return true;
}

}  // namespace avdc
