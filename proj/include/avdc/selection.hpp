#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "avdc/graph.hpp"

namespace avdc {

// A subset H of the host's edges together with its complement. Degrees in
// both H and the complement, and the isolated-edge sets of both, are
// maintained incrementally on every mutation.
//
// The host graph must outlive the selection. Single writer.
class SubgraphSelection {
 public:
  explicit SubgraphSelection(const Graph& host);
  SubgraphSelection(const Graph& host, std::span<const EdgeIndex> selected);

  const Graph& host() const { return *host_; }

  bool contains(EdgeIndex e) const { return selected_[e] != 0; }
  void add(EdgeIndex e);     // throws PreconditionError if already selected
  void remove(EdgeIndex e);  // throws PreconditionError if not selected

  int degree(Vertex v) const { return degree_[v]; }
  int complement_degree(Vertex v) const { return host_->degree(v) - degree_[v]; }

  std::size_t size() const { return size_; }
  std::size_t complement_size() const { return host_->edge_count() - size_; }

  // Edges of H (resp. complement) whose endpoints both have degree 1 there.
  const std::set<EdgeIndex>& isolated() const { return isolated_; }
  const std::set<EdgeIndex>& complement_isolated() const { return complement_isolated_; }

  std::vector<EdgeIndex> selected_edges() const;
  std::vector<EdgeIndex> complement_edges() const;

  // Bumped on every mutation.
  std::uint64_t version() const { return version_; }

  int max_degree() const;
  int complement_max_degree() const;

 private:
  void refresh_around(EdgeIndex e, bool erase);
  void classify(EdgeIndex e);

  const Graph* host_;
  std::vector<char> selected_;
  std::vector<int> degree_;
  std::size_t size_ = 0;
  std::set<EdgeIndex> isolated_;
  std::set<EdgeIndex> complement_isolated_;
  std::uint64_t version_ = 0;
};

SubgraphSelection complement_selection(const SubgraphSelection& sel);

}  // namespace avdc
