#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "xhtpy/constructions.hpp"
#include "xhtpy/search.hpp"
#include "xhtpy/verify.hpp"

using namespace xhtpy;

TEST(Homs, SmallCounts) {
  EXPECT_EQ(enumerate_homs(complete_graph(2), complete_graph(3)).size(), 6u);
  EXPECT_EQ(enumerate_homs(interval(0), complete_graph(2)).size(), 0u);
  EXPECT_EQ(enumerate_homs(complete_graph(2), make_graph({}, {})).size(), 0u);
  EXPECT_EQ(enumerate_homs(make_graph({}, {}), complete_graph(2)).size(), 1u);
}

TEST(Homs, LexicographicOrder) {
  auto maps = enumerate_homs(path_graph(3), complete_graph(3));
  for (std::size_t i = 1; i < maps.size(); ++i) EXPECT_LT(maps[i - 1].images(), maps[i].images());
}

TEST(Homs, MatchNaiveFilter) {
  gen::Rng rng(3);
  for (int i = 0; i < 150; ++i) {
    Graph a = gen::random_graph(rng, 0, 4, 0.3, 0.4);
    Graph b = gen::random_graph(rng, 0, 4, 0.3, 0.4);
    auto fast = enumerate_homs(a, b);
    auto slow = oracle::homs(a, b);
    ASSERT_EQ(fast.size(), slow.size());
    for (std::size_t k = 0; k < fast.size(); ++k) EXPECT_EQ(fast[k].images(), slow[k]);
    EXPECT_EQ(count_homs(a, b), slow.size());
  }
}

TEST(Homs, BudgetIsReported) {
  Budget tiny;
  tiny.search_nodes = 5;
  try {
    enumerate_homs(cycle_graph(6), complete_graph(3), tiny);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.limit(), 5u);
  }
}

TEST(Copies, TriangleInFigureTwo) {
  auto copies = enumerate_copies(complete_graph(3), build_figure2().a, CopyMode::Subgraph, true);
  ASSERT_EQ(copies.size(), 1u);
  EXPECT_EQ(copies[0].image_graph().labels(), (std::vector<VertexId>{"1", "2", "3"}));
}

TEST(Copies, FigureOneHostContainsBothCopies) {
  const Figure1 fig = build_figure1();
  auto copies = enumerate_copies(fig.a, fig.b, CopyMode::Subgraph, true);
  auto has = [&](std::vector<VertexId> verts, std::vector<LabelEdge> edges) {
    std::sort(verts.begin(), verts.end());
    const Graph want = make_graph(verts, edges);
    for (const auto& c : copies)
      if (c.image_graph() == want) return true;
    return false;
  };
  EXPECT_TRUE(has({"x", "y", "z", "1", "2", "3"},
                  {{"x", "y"}, {"x", "z"}, {"y", "z"}, {"x", "1"}, {"1", "2"}, {"2", "3"}, {"3", "z"}}));
  EXPECT_TRUE(has({"x", "y", "b", "c", "d", "e"},
                  {{"x", "b"}, {"b", "y"}, {"y", "x"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "x"}}));
  for (const auto& c : copies) EXPECT_TRUE(c.verify());
}

TEST(Copies, IdentityIsAnInducedCopy) {
  const Graph g = build_figure3().d;
  auto copies = enumerate_copies(g, g, CopyMode::Induced);
  ASSERT_FALSE(copies.empty());
  std::vector<Vertex> id(g.order());
  for (Vertex v = 0; v < g.order(); ++v) id[v] = v;
  EXPECT_EQ(copies.front().vertex_image, id);
}

TEST(Copies, EveryEmbeddingVerifies) {
  gen::Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    Graph p = gen::random_graph(rng, 1, 3, 0.3, 0.5);
    Graph h = gen::random_graph(rng, 2, 6, 0.3, 0.5);
    for (auto mode : {CopyMode::Induced, CopyMode::Subgraph}) {
      auto all = enumerate_copies(p, h, mode);
      for (const auto& c : all) EXPECT_TRUE(c.verify());
      // Induced copies are among the subgraph copies.
      if (mode == CopyMode::Induced)
        EXPECT_LE(all.size(), enumerate_copies(p, h, CopyMode::Subgraph).size());
    }
  }
}

TEST(Isomorphism, Examples) {
  const Figure3 fig = build_figure3();
  const Graph ds = stiff_reduction(fig.d, GivenFolds{{{"3", "4"}, {"4", "1"}}}).result;
  auto iso = is_isomorphic(ds, fig.b);
  ASSERT_TRUE(iso);
  EXPECT_EQ(iso->assignment(), (std::map<VertexId, VertexId>{{"1", "1"}, {"2", "2"}, {"5", "3"}}));
  auto self = is_isomorphic(fig.d, fig.d);
  ASSERT_TRUE(self);
  EXPECT_EQ(*self, GraphMap::identity(fig.d));
  EXPECT_FALSE(is_isomorphic(cycle_graph(5), disjoint_union(cycle_graph(3), complete_graph(2), "a", "b")));
}

TEST(Isomorphism, RandomRelabelings) {
  gen::Rng rng(17);
  for (int i = 0; i < 120; ++i) {
    Graph g = gen::random_graph(rng, 1, 10, 0.3, 0.4);
    GraphMap r = gen::random_relabel(rng, g);
    auto iso = is_isomorphic(g, r.codomain());
    ASSERT_TRUE(iso);
    EXPECT_TRUE(iso->is_induced_inclusion());
  }
}

TEST(Isomorphism, AgreesWithBruteForce) {
  gen::Rng rng(23);
  for (int i = 0; i < 150; ++i) {
    Graph g = gen::random_graph(rng, 1, 6, 0.3, 0.5);
    Graph h = gen::random_graph(rng, g.order(), g.order(), 0.3, 0.5);
    EXPECT_EQ(is_isomorphic(g, h).has_value(), oracle::isomorphic(g, h));
  }
}
