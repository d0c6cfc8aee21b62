#pragma once

// Test-side oracles. Nothing here calls into the code under test beyond the
// Graph container and SubgraphSelection's public accessors.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "avdc/generators.hpp"
#include "avdc/graph.hpp"
#include "avdc/selection.hpp"

namespace avdc::oracle {

// Length of a shortest cycle, 0 for forests.
int girth(const Graph& g);

// Drops isolated edges, then isolated vertices (labels are compacted).
Graph strip_to_normal(const Graph& g);

// No isolated vertex and no K2 component, computed from the edge list.
bool normal_by_definition(const Graph& g);

// Random normal graph with n in [n_lo, n_hi] and Δ in [d_lo, d_hi].
Graph random_normal_graph(Rng& rng, int n_lo, int n_hi, int d_lo, int d_hi);

// Canonical string for the isomorphism class (individualisation-refinement).
std::string canonical_form(const Graph& g);

// All connected graphs with 2..max_n vertices and max degree <= 3, one per
// isomorphism class, ordered by (n, m, canonical form).
std::vector<Graph> connected_subcubic_graphs(int max_n);

// Degrees and isolated-edge sets of a selection recomputed from scratch.
struct SelectionRecount {
  std::vector<int> degree;
  std::vector<int> complement_degree;
  std::set<EdgeIndex> isolated;
  std::set<EdgeIndex> complement_isolated;
};
SelectionRecount recount(const Graph& g, const SubgraphSelection& sel);

// Potential (i(H) + i(Hbar), |E(H)|) from scratch.
std::pair<std::size_t, std::size_t> recount_potential(const Graph& g, const SubgraphSelection& sel);

// Membership in the admissible family from the definition.
bool admissible_by_definition(const Graph& g, const SubgraphSelection& sel);

}  // namespace avdc::oracle
