#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace avdc {

using Vertex = int;
using EdgeIndex = int;

// Unordered vertex pair stored as (min, max). Ordering is lexicographic and
// matches the edge index order of the owning Graph.
struct EdgeId {
  Vertex u = 0;
  Vertex v = 0;

  static EdgeId make(Vertex a, Vertex b) {
    return a < b ? EdgeId{a, b} : EdgeId{b, a};
  }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

struct Incidence {
  Vertex vertex;
  EdgeIndex edge;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; edges are
// kept sorted by EdgeId so that edge indices are deterministic.
class Graph {
 public:
  Graph() = default;

  // Throws ParseError on self-loops, out-of-range endpoints or duplicates.
  Graph(int vertex_count, std::span<const EdgeId> edges);
  Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<EdgeId>& edges() const { return edges_; }
  const EdgeId& edge(EdgeIndex e) const { return edges_[e]; }

  // Sorted by neighbour label.
  std::span<const Incidence> incident(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  int max_degree() const { return max_degree_; }
  int min_degree() const;

  std::optional<EdgeIndex> find_edge(Vertex a, Vertex b) const;
  EdgeIndex edge_index(const EdgeId& e) const;  // throws PreconditionError
  bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  bool is_regular() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<EdgeId> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  int max_degree_ = 0;
};

// Edge-induced subgraph relabelled densely; vertices appear in ascending
// host-label order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host_vertex;
  std::vector<EdgeIndex> to_host_edge;

  EdgeId host_edge(EdgeIndex e) const;
};

InducedSubgraph edge_induced(const Graph& g, std::span<const EdgeId> edges);
InducedSubgraph edge_induced(const Graph& g, std::span<const EdgeIndex> edges);

// No isolated vertices and no isolated edges.
bool is_normal(const Graph& g);

}  // namespace avdc
