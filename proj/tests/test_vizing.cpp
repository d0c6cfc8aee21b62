#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "avdc/errors.hpp"
#include "avdc/generators.hpp"
#include "avdc/verify.hpp"
#include "avdc/vizing.hpp"

using namespace avdc;

TEST(MisraGries, SmallExamples) {
  EXPECT_EQ(misra_gries(cycle_graph(5)).palette_size(), 3);
  EXPECT_EQ(misra_gries(Graph(2, {{0, 1}})).palette_size(), 1);
  EdgeColoring p = misra_gries(petersen_graph());
  EXPECT_TRUE(check_proper(petersen_graph(), p).ok);
  // Petersen is class 2: the oracle refutes 3 colours.
  EXPECT_EQ(exact_chromatic_index(petersen_graph()), 4);
  EXPECT_EQ(p.palette_size(), 4);
}

TEST(MisraGries, Deterministic) {
  Graph g = gnp_graph(40, 0.2, 3);
  EXPECT_EQ(misra_gries(g), misra_gries(g));
}

// Property: proper, at most Δ+1 colours, colours consecutive from 1.
TEST(MisraGries, ProperWithinVizingBound) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(seed);
    const int n = 2 + static_cast<int>(rng.below(50));
    Graph g = gnp_graph(n, rng.unit() * 0.6, seed);
    EdgeColoring c = misra_gries(g);
    ASSERT_TRUE(check_proper(g, c).ok) << seed;
    auto palette = c.palette();
    ASSERT_LE(static_cast<int>(palette.size()), g.max_degree() + 1);
    for (std::size_t i = 0; i < palette.size(); ++i) ASSERT_EQ(palette[i], static_cast<Color>(i + 1));
  }
}

TEST(ColorClasses, CycleAndPadding) {
  EdgeColoring c = misra_gries(cycle_graph(5));
  auto classes = color_classes(c, 3);
  std::multiset<std::size_t> sizes;
  for (auto& k : classes) sizes.insert(k.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 2, 2}));
  EXPECT_THROW(color_classes(c, 2), PreconditionError);

  Graph k4 = complete_graph(4);
  EXPECT_EQ(exact_chromatic_index(k4), 3);
  EdgeColoring ck4 = misra_gries(k4);
  const int used = ck4.palette_size();
  ASSERT_LE(used, 4);
  auto padded = color_classes(ck4, used + 1);
  ASSERT_EQ(padded.size(), static_cast<std::size_t>(used + 1));
  EXPECT_TRUE(padded[used].empty());
}

// Property: classes are matchings whose union is E(g).
TEST(ColorClasses, MatchingsCoveringEdges) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = gnp_graph(25, 0.3, seed);
    EdgeColoring c = misra_gries(g);
    auto classes = color_classes(c, c.palette_size());
    std::vector<EdgeIndex> all;
    for (const auto& cls : classes) {
      std::set<Vertex> touched;
      for (EdgeIndex e : cls) {
        ASSERT_TRUE(touched.insert(g.edge(e).u).second);
        ASSERT_TRUE(touched.insert(g.edge(e).v).second);
        all.push_back(e);
      }
    }
    std::sort(all.begin(), all.end());
    ASSERT_EQ(static_cast<int>(all.size()), g.edge_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) ASSERT_EQ(all[e], e);
  }
}

// For regular graphs every vertex sees d(v) distinct colours.
TEST(ColorClasses, RegularGraphVertexSets) {
  for (int r = 3; r <= 8; ++r) {
    Graph g = random_regular_graph(2 * r + 2, r, r);
    EdgeColoring c = misra_gries(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto at = c.colors_at(g, v);
      EXPECT_EQ(static_cast<int>(std::set<Color>(at.begin(), at.end()).size()), g.degree(v));
    }
  }
}
