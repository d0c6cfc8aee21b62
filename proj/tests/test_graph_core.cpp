#include <gtest/gtest.h>

#include "avdc/edge_partition.hpp"
#include "avdc/errors.hpp"
#include "avdc/generators.hpp"
#include "avdc/graph.hpp"
#include "avdc/selection.hpp"
#include "support/oracles.hpp"

using namespace avdc;

TEST(Graph, RejectsSelfLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{0, 0}}), ParseError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), ParseError);
  EXPECT_THROW(Graph(3, {{0, 3}}), ParseError);
  EXPECT_THROW(Graph(3, {{-1, 2}}), ParseError);
}

TEST(Graph, EdgesSortedAndAdjacencySymmetric) {
  Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
  ASSERT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.edge(0), (EdgeId{0, 1}));
  EXPECT_EQ(g.edge(1), (EdgeId{0, 2}));
  EXPECT_EQ(g.edge(2), (EdgeId{1, 3}));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    EXPECT_EQ(g.degree(v), static_cast<int>(g.incident(v).size()));
    for (const Incidence& inc : g.incident(v)) {
      EXPECT_TRUE(g.has_edge(inc.vertex, v));
      EXPECT_EQ(g.edge(inc.edge).other(v), inc.vertex);
    }
  }
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_EQ(g.min_degree(), 1);
  EXPECT_EQ(g.find_edge(2, 0), 1);
  EXPECT_FALSE(g.find_edge(2, 3).has_value());
  EXPECT_THROW(g.edge_index({2, 3}), PreconditionError);
}

TEST(Graph, IsNormal) {
  EXPECT_FALSE(is_normal(Graph(2, {{0, 1}})));
  EXPECT_TRUE(is_normal(Graph(3, {{0, 1}, {1, 2}})));
  // K2 plus C5
  EXPECT_FALSE(is_normal(Graph(7, {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 6}})));
  EXPECT_FALSE(is_normal(Graph(4, {{0, 1}, {1, 2}})));  // isolated vertex 3
  EXPECT_TRUE(is_normal(Graph()));
}

TEST(Graph, IsNormalMatchesDefinitionOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = gnp_graph(2 + static_cast<int>(seed % 12), 0.25, seed);
    EXPECT_EQ(is_normal(g), oracle::normal_by_definition(g)) << seed;
  }
}

TEST(EdgeInduced, Examples) {
  Graph k4 = complete_graph(4);
  EXPECT_EQ(edge_induced(k4, std::span<const EdgeId>()).graph.vertex_count(), 0);

  std::vector<EdgeId> triangle{{0, 1}, {0, 2}, {1, 2}};
  InducedSubgraph c3 = edge_induced(k4, std::span<const EdgeId>(triangle));
  EXPECT_EQ(c3.graph, cycle_graph(3));
  EXPECT_EQ(c3.to_host_vertex, (std::vector<Vertex>{0, 1, 2}));

  std::vector<EdgeId> two{{2, 3}, {3, 4}};
  InducedSubgraph p3 = edge_induced(cycle_graph(5), std::span<const EdgeId>(two));
  EXPECT_EQ(p3.graph, Graph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(p3.host_edge(1), (EdgeId{3, 4}));

  std::vector<EdgeId> foreign{{0, 2}};
  EXPECT_THROW(edge_induced(cycle_graph(5), std::span<const EdgeId>(foreign)), PreconditionError);
}

TEST(Generators, Cycle) {
  Graph c5 = cycle_graph(5);
  EXPECT_EQ(c5.vertex_count(), 5);
  EXPECT_EQ(c5.edge_count(), 5);
  EXPECT_TRUE(c5.is_regular());
  EXPECT_EQ(c5.max_degree(), 2);
  EXPECT_THROW(cycle_graph(2), PreconditionError);
}

TEST(Generators, Petersen) {
  Graph p = petersen_graph();
  EXPECT_EQ(p.vertex_count(), 10);
  EXPECT_EQ(p.edge_count(), 15);
  EXPECT_TRUE(p.is_regular());
  EXPECT_EQ(p.max_degree(), 3);
  EXPECT_EQ(oracle::girth(p), 5);
}

TEST(Generators, Complete) {
  Graph k7 = complete_graph(7);
  EXPECT_EQ(k7.edge_count(), 21);
  EXPECT_EQ(oracle::girth(k7), 3);
}

TEST(Generators, RandomRegularIsRegularAndDeterministic) {
  Graph g = random_regular_graph(20, 6, 42);
  EXPECT_EQ(g.vertex_count(), 20);
  for (Vertex v = 0; v < 20; ++v) EXPECT_EQ(g.degree(v), 6);
  EXPECT_EQ(g, random_regular_graph(20, 6, 42));
  EXPECT_NE(g, random_regular_graph(20, 6, 43));
  for (int r = 3; r <= 12; ++r)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const int n = r % 2 ? 2 * r + 2 : 2 * r + 1;
      Graph h = random_regular_graph(n, r, seed);
      EXPECT_TRUE(h.is_regular());
      EXPECT_EQ(h.max_degree(), r);
    }
  EXPECT_THROW(random_regular_graph(5, 3, 1), PreconditionError);
  EXPECT_THROW(random_regular_graph(4, 4, 1), PreconditionError);
}

TEST(Generators, GnpDeterministic) {
  EXPECT_EQ(gnp_graph(30, 0.2, 7), gnp_graph(30, 0.2, 7));
  EXPECT_EQ(gnp_graph(10, 0.0, 1).edge_count(), 0);
  EXPECT_EQ(gnp_graph(10, 1.0, 1).edge_count(), 45);
  EXPECT_THROW(gnp_graph(10, 1.5, 1), PreconditionError);
}

TEST(Generators, RngBelowIsInRangeAndCoversValues) {
  Rng rng(5);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[rng.below(7)];
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(Selection, ComplementExamples) {
  Graph k5 = complete_graph(5);
  std::vector<EdgeIndex> all(k5.edge_count());
  for (EdgeIndex e = 0; e < k5.edge_count(); ++e) all[e] = e;
  SubgraphSelection full(k5, all);
  EXPECT_EQ(complement_selection(full).size(), 0u);

  Graph c5 = cycle_graph(5);
  std::vector<EdgeIndex> two{0, 3};
  SubgraphSelection sel(c5, two);
  SubgraphSelection comp = complement_selection(sel);
  EXPECT_EQ(comp.size(), 3u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(sel.degree(v) + comp.degree(v), 2);
}

TEST(Selection, ComplementIsInvolution) {
  Graph k5 = complete_graph(5);
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    SubgraphSelection sel(k5);
    for (EdgeIndex e = 0; e < k5.edge_count(); ++e)
      if (rng.below(2)) sel.add(e);
    SubgraphSelection twice = complement_selection(complement_selection(sel));
    EXPECT_EQ(twice.selected_edges(), sel.selected_edges());
  }
}

TEST(Selection, AddRemovePreconditions) {
  Graph c5 = cycle_graph(5);
  SubgraphSelection sel(c5);
  EXPECT_THROW(sel.remove(0), PreconditionError);
  sel.add(0);
  EXPECT_THROW(sel.add(0), PreconditionError);
  const auto v = sel.version();
  sel.remove(0);
  EXPECT_GT(sel.version(), v);
}

// Property: incremental bookkeeping equals a from-scratch recount after every
// mutation of a random add/remove sequence.
TEST(Selection, IncrementalMatchesRecount) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    Graph g = gnp_graph(8 + static_cast<int>(rng.below(20)), 0.3, seed);
    if (g.edge_count() == 0) continue;
    SubgraphSelection sel(g);
    for (int step = 0; step < 200; ++step) {
      EdgeIndex e = static_cast<EdgeIndex>(rng.below(g.edge_count()));
      if (sel.contains(e)) sel.remove(e);
      else sel.add(e);
      auto r = oracle::recount(g, sel);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        ASSERT_EQ(sel.degree(v), r.degree[v]);
        ASSERT_EQ(sel.complement_degree(v), r.complement_degree[v]);
      }
      ASSERT_EQ(sel.isolated(), r.isolated);
      ASSERT_EQ(sel.complement_isolated(), r.complement_isolated);
      ASSERT_EQ(sel.size() + sel.complement_size(), static_cast<std::size_t>(g.edge_count()));
    }
  }
}

TEST(EdgePartition, ValidatesDisjointCoveringNonempty) {
  Graph c4 = cycle_graph(4);
  EXPECT_NO_THROW(EdgePartition(c4, {{{0, 1}, {1, 2}}, {{2, 3}, {0, 3}}}));
  EXPECT_THROW(EdgePartition(c4, {{{0, 1}, {1, 2}}, {{2, 3}}}), PreconditionError);
  EXPECT_THROW(EdgePartition(c4, {{{0, 1}, {1, 2}, {2, 3}}, {{2, 3}, {0, 3}}}), PreconditionError);
  EXPECT_THROW(EdgePartition(c4, {{{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {}}), PreconditionError);
  EXPECT_THROW(EdgePartition(c4, {{{0, 1}, {1, 2}, {2, 3}, {0, 2}}}), PreconditionError);
  EdgePartition p(c4, {{{2, 3}, {0, 3}}, {{1, 2}, {0, 1}}});
  EXPECT_EQ(p.part_max_degree(0), 2);
  EXPECT_EQ(p.part_graph(1).graph.edge_count(), 2);
}
