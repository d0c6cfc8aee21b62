#include "avdc/edge_partition.hpp"

#include <algorithm>
#include <string>

#include "avdc/errors.hpp"

namespace avdc {

EdgePartition::EdgePartition(Graph host, std::vector<std::vector<EdgeId>> parts)
    : host_(std::move(host)), parts_(std::move(parts)) {
  std::vector<int> owner(host_.edge_count(), -1);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    auto& part = parts_[i];
    if (part.empty()) throw PreconditionError("partition part " + std::to_string(i) + " is empty");
    for (EdgeId& e : part) {
      e = EdgeId::make(e.u, e.v);
      EdgeIndex idx = host_.edge_index(e);
      if (owner[idx] != -1)
        throw PreconditionError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                ") appears in parts " + std::to_string(owner[idx]) + " and " +
                                std::to_string(i));
      owner[idx] = static_cast<int>(i);
    }
    std::sort(part.begin(), part.end());
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end())
    throw PreconditionError("partition does not cover every host edge");
}

InducedSubgraph EdgePartition::part_graph(std::size_t i) const {
  return edge_induced(host_, std::span<const EdgeId>(parts_.at(i)));
}

int EdgePartition::part_max_degree(std::size_t i) const {
  std::vector<int> deg(host_.vertex_count(), 0);
  int best = 0;
  for (const EdgeId& e : parts_.at(i)) best = std::max({best, ++deg[e.u], ++deg[e.v]});
  return best;
}

}  // namespace avdc
