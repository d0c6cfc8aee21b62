#include "avdc/selection.hpp"

#include <algorithm>

#include "avdc/errors.hpp"

namespace avdc {

SubgraphSelection::SubgraphSelection(const Graph& host)
    : host_(&host), selected_(host.edge_count(), 0), degree_(host.vertex_count(), 0) {
  for (EdgeIndex e = 0; e < host.edge_count(); ++e) classify(e);
}

SubgraphSelection::SubgraphSelection(const Graph& host, std::span<const EdgeIndex> selected)
    : host_(&host), selected_(host.edge_count(), 0), degree_(host.vertex_count(), 0) {
  for (EdgeIndex e : selected) {
    if (e < 0 || e >= host.edge_count()) throw PreconditionError("edge index out of range");
    if (selected_[e]) continue;
    selected_[e] = 1;
    ++degree_[host.edge(e).u];
    ++degree_[host.edge(e).v];
    ++size_;
  }
  for (EdgeIndex e = 0; e < host.edge_count(); ++e) classify(e);
}

void SubgraphSelection::classify(EdgeIndex e) {
  const EdgeId& id = host_->edge(e);
  if (selected_[e]) {
    if (degree_[id.u] == 1 && degree_[id.v] == 1) isolated_.insert(e);
  } else {
    if (complement_degree(id.u) == 1 && complement_degree(id.v) == 1)
      complement_isolated_.insert(e);
  }
}

void SubgraphSelection::refresh_around(EdgeIndex e, bool erase) {
  const EdgeId& id = host_->edge(e);
  for (Vertex end : {id.u, id.v}) {
    for (const Incidence& inc : host_->incident(end)) {
      if (erase) {
        isolated_.erase(inc.edge);
        complement_isolated_.erase(inc.edge);
      } else {
        classify(inc.edge);
      }
    }
  }
}

void SubgraphSelection::add(EdgeIndex e) {
  if (selected_.at(e)) throw PreconditionError("edge already selected");
  refresh_around(e, true);
  selected_[e] = 1;
  ++degree_[host_->edge(e).u];
  ++degree_[host_->edge(e).v];
  ++size_;
  refresh_around(e, false);
  ++version_;
}

void SubgraphSelection::remove(EdgeIndex e) {
  if (!selected_.at(e)) throw PreconditionError("edge not selected");
  refresh_around(e, true);
  selected_[e] = 0;
  --degree_[host_->edge(e).u];
  --degree_[host_->edge(e).v];
  --size_;
  refresh_around(e, false);
  ++version_;
}

std::vector<EdgeIndex> SubgraphSelection::selected_edges() const {
  std::vector<EdgeIndex> out;
  out.reserve(size_);
  for (EdgeIndex e = 0; e < host_->edge_count(); ++e)
    if (selected_[e]) out.push_back(e);
  return out;
}

std::vector<EdgeIndex> SubgraphSelection::complement_edges() const {
  std::vector<EdgeIndex> out;
  out.reserve(complement_size());
  for (EdgeIndex e = 0; e < host_->edge_count(); ++e)
    if (!selected_[e]) out.push_back(e);
  return out;
}

int SubgraphSelection::max_degree() const {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

int SubgraphSelection::complement_max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < host_->vertex_count(); ++v) best = std::max(best, complement_degree(v));
  return best;
}

SubgraphSelection complement_selection(const SubgraphSelection& sel) {
  auto rest = sel.complement_edges();
  return SubgraphSelection(sel.host(), rest);
}

}  // namespace avdc
