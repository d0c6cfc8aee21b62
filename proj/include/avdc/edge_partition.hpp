#pragma once

#include <vector>

#include "avdc/graph.hpp"

namespace avdc {

// Ordered list of nonempty, pairwise disjoint edge sets covering E(host).
// The constructor rejects anything else with PreconditionError.
class EdgePartition {
 public:
  EdgePartition(Graph host, std::vector<std::vector<EdgeId>> parts);

  const Graph& host() const { return host_; }
  const std::vector<std::vector<EdgeId>>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }

  InducedSubgraph part_graph(std::size_t i) const;
  int part_max_degree(std::size_t i) const;

 private:
  Graph host_;
  std::vector<std::vector<EdgeId>> parts_;
};

}  // namespace avdc
