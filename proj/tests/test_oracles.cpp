#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "avdc/generators.hpp"
#include "support/oracles.hpp"

using namespace avdc;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<EdgeId> edges;
  for (const EdgeId& e : g.edges()) edges.push_back(EdgeId::make(perm[e.u], perm[e.v]));
  return Graph(g.vertex_count(), edges);
}

}  // namespace

TEST(Girth, Examples) {
  EXPECT_EQ(oracle::girth(cycle_graph(7)), 7);
  EXPECT_EQ(oracle::girth(petersen_graph()), 5);
  EXPECT_EQ(oracle::girth(Graph(4, {{0, 1}, {1, 2}, {2, 3}})), 0);
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gnp_graph(9, 0.35, seed);
    std::vector<Vertex> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(seed + 1000);
    rng.shuffle(perm.begin(), perm.end());
    EXPECT_EQ(oracle::canonical_form(g), oracle::canonical_form(relabel(g, perm)));
  }
}

TEST(CanonicalForm, SeparatesNonIsomorphic) {
  // Same degree sequence, different graphs.
  Graph c6 = cycle_graph(6);
  Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_NE(oracle::canonical_form(c6), oracle::canonical_form(two_triangles));
  // Petersen vs the 5-prism: both 3-regular on 10 vertices.
  Graph prism(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {5, 6}, {6, 7}, {7, 8}, {8, 9},
                   {5, 9}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
  EXPECT_NE(oracle::canonical_form(petersen_graph()), oracle::canonical_form(prism));
}

// Counts of connected graphs with max degree <= 3, by vertex count, from an
// independent networkx enumeration.
TEST(SubcubicEnumeration, MatchesReferenceCounts) {
  const std::map<int, int> expected{{2, 1}, {3, 2}, {4, 6}, {5, 10}, {6, 29}, {7, 64}, {8, 194}};
  std::map<int, int> counts;
  for (const Graph& g : oracle::connected_subcubic_graphs(8)) {
    EXPECT_LE(g.max_degree(), 3);
    ++counts[g.vertex_count()];
  }
  EXPECT_EQ(counts, expected);
}

TEST(RandomNormalGraph, RespectsDegreeWindow) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    Graph g = oracle::random_normal_graph(rng, 10, 40, 4, 9);
    EXPECT_TRUE(oracle::normal_by_definition(g));
    EXPECT_GE(g.max_degree(), 4);
    EXPECT_LE(g.max_degree(), 9);
  }
}
