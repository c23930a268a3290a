#include <gtest/gtest.h>

#include <numeric>

#include "creg/graph.hpp"
#include "creg/verify.hpp"
#include "support/oracle.hpp"

using namespace creg;

namespace {

Graph from(int n, std::initializer_list<Edge> e) {
  std::vector<Edge> v(e);
  return Graph::from_edges(n, v);
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(Graph, FromEdgesValidates) {
  EXPECT_THROW(from(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(from(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(from(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(from(3, {{-1, 2}}), std::invalid_argument);
  const Graph g = from(3, {{2, 0}, {1, 0}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_EQ(g.degree(0), 2);
}

TEST(Graph, WideGraphs) {
  const Graph g = cycle_graph(130);
  EXPECT_EQ(g.size(), 130u);
  EXPECT_TRUE(g.adjacent(129, 0));
  EXPECT_TRUE(g.adjacent(63, 64));
  EXPECT_EQ(connected_components(g).size(), 1u);
}

TEST(Circulant, Examples) {
  const Graph c10 = circulant(10, std::vector<int>{1, 3});
  EXPECT_EQ(c10.size(), 20u);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(c10.degree(v), 4);
  EXPECT_EQ(circulant(4, std::vector<int>{1, 2}), complete_graph(4));
  const Graph m = circulant(6, std::vector<int>{3});
  EXPECT_EQ(m.edges(), (std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_THROW(circulant(6, std::vector<int>{4}), std::invalid_argument);
  EXPECT_THROW(circulant(6, std::vector<int>{0}), std::invalid_argument);
}

TEST(Circulant, WithoutJumpAndCubic) {
  EXPECT_EQ(circulant_without_jump(8, 2), circulant(8, std::vector<int>{1, 3, 4}));
  EXPECT_EQ(moebius(2), complete_graph(4));
  // moebius(3) is K_{3,3} on {0,2,4} / {1,3,5}.
  const Graph k33 = moebius(3);
  EXPECT_EQ(k33.size(), 9u);
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) EXPECT_EQ(k33.adjacent(a, b), (a + b) % 2 == 1);
  EXPECT_EQ(prism(3), circulant(6, std::vector<int>{2, 3}));
  EXPECT_THROW(prism(4), std::invalid_argument);
  EXPECT_THROW(moebius(1), std::invalid_argument);
  EXPECT_EQ(cubic_circulant(5, 3), circulant(10, std::vector<int>{3, 5}));
}

TEST(Graph, ComplementAndInduced) {
  EXPECT_EQ(complement(complete_graph(4)).size(), 0u);
  EXPECT_EQ(complement(circulant(8, std::vector<int>{1, 3, 4})), circulant(8, std::vector<int>{2}));
  std::uint64_t seed = 11;
  for (int k = 0; k < 20; ++k) {
    const Graph g = random_graph(seed, 1, 9);
    EXPECT_EQ(complement(complement(g)), g);
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(induced_subgraph(g, all).graph, g);
  }
  const std::vector<int> w{0, 1, 2};
  EXPECT_EQ(induced_subgraph(cycle_graph(5), w).graph, path_graph(3));
  const std::vector<int> evens{0, 2, 4, 6, 8};
  const auto sub = induced_subgraph(circulant(10, std::vector<int>{2}), evens);
  EXPECT_EQ(sub.graph, cycle_graph(5));
  EXPECT_EQ(sub.labels, evens);
}

TEST(Graph, Deletions) {
  EXPECT_EQ(delete_vertex(complete_graph(3), 0), complete_graph(2));
  EXPECT_EQ(delete_closed_neighborhood(complete_graph(5), 2).order(), 0);
  const Graph g = delete_closed_neighborhood(cycle_graph(5), 0);
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.size(), 1u);
}

TEST(Graph, DisjointUnion) {
  const Graph two = disjoint_union(complete_graph(2), complete_graph(2));
  EXPECT_EQ(two.order(), 4);
  EXPECT_EQ(two.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
  EXPECT_EQ(disjoint_union(cycle_graph(5), Graph(0)), cycle_graph(5));
  const Graph c4 = cycle_graph(4);
  const Graph three = disjoint_union(disjoint_union(c4, c4), c4);
  EXPECT_TRUE(oracle::isomorphic(three, circulant(12, std::vector<int>{3})));
}

TEST(CycleDecomposition, Examples) {
  auto d = cycle_decomposition(12, 3);
  EXPECT_EQ(d.components, 3);
  EXPECT_EQ(d.cycle_length, 4);
  EXPECT_EQ(d.classes[1], (std::vector<int>{1, 4, 7, 10}));
  d = cycle_decomposition(6, 3);
  EXPECT_EQ(d.components, 3);
  EXPECT_EQ(d.cycle_length, 2);
  d = cycle_decomposition(10, 2);
  EXPECT_EQ(d.components, 2);
  EXPECT_EQ(d.cycle_length, 5);
}

TEST(CycleDecomposition, MatchesComponents) {
  for (int n = 2; n <= 12; ++n)
    for (int j = 1; j <= n / 2; ++j) {
      const Graph g = circulant(n, std::vector<int>{j});
      const auto d = cycle_decomposition(n, j);
      const auto comps = connected_components(g);
      ASSERT_EQ(static_cast<int>(comps.size()), d.components) << n << " " << j;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        auto cls = d.classes[c];
        std::sort(cls.begin(), cls.end());
        EXPECT_EQ(comps[c], cls);
        const auto sub = induced_subgraph(g, comps[c]).graph;
        if (d.cycle_length == 2)
          EXPECT_EQ(sub, complete_graph(2));
        else
          EXPECT_TRUE(oracle::isomorphic(sub, cycle_graph(d.cycle_length)));
      }
    }
}

TEST(DavisDomke, Examples) {
  auto d = davis_domke(6, 4);
  EXPECT_EQ(d.copies, 2);
  EXPECT_EQ(d.base_n, 3);
  EXPECT_EQ(d.base_a, 2);
  d = davis_domke(4, 2);
  EXPECT_EQ(d.copies, 2);
  EXPECT_EQ(d.base_n, 2);
  EXPECT_EQ(d.base_a, 1);
  d = davis_domke(3, 1);
  EXPECT_EQ(d.copies, 1);
  EXPECT_EQ(d.base_n, 3);
  EXPECT_EQ(d.base_a, 1);
  EXPECT_THROW(davis_domke(4, 4), std::invalid_argument);
  EXPECT_THROW(davis_domke(4, 0), std::invalid_argument);
}

TEST(DavisDomke, IsomorphicToCirculant) {
  for (int n = 2; n <= 10; ++n)
    for (int a = 1; a < n; ++a) {
      const auto d = davis_domke(n, a);
      const Graph base = d.base_a == 1 ? moebius(d.base_n) : prism(d.base_n);
      Graph u(0);
      for (int c = 0; c < d.copies; ++c) u = disjoint_union(u, base);
      const Graph g = cubic_circulant(n, a);
      ASSERT_EQ(u.order(), g.order());
      EXPECT_EQ(degrees(u), degrees(g));
      const auto cg = connected_components(g);
      EXPECT_EQ(static_cast<int>(cg.size()), d.copies);
      for (const auto& c : cg) EXPECT_EQ(static_cast<int>(c.size()), 2 * d.base_n);
      if (g.order() <= 14) EXPECT_TRUE(oracle::isomorphic(u, g)) << n << " " << a;
    }
}

TEST(Ladders, Shapes) {
  const Graph a1 = family_A(1);
  EXPECT_EQ(a1.order(), 6);
  EXPECT_EQ(a1.size(), 6u);
  EXPECT_TRUE(oracle::isomorphic(family_B(1), cycle_graph(4)));
  const Graph d1 = family_D(1);
  EXPECT_EQ(d1.order(), 6);
  EXPECT_EQ(d1.size(), 6u);
  // Pendants of D_1 sit on opposite corners; those of A_1 on adjacent ones.
  EXPECT_FALSE(oracle::isomorphic(a1, d1));
  EXPECT_EQ(degrees(a1), degrees(d1));
  for (int t = 1; t <= 6; ++t) {
    EXPECT_EQ(family_B(t).order(), 2 * t + 2);
    EXPECT_EQ(family_B(t).size(), static_cast<std::size_t>(3 * t + 1));
    EXPECT_EQ(family_A(t).size(), static_cast<std::size_t>(3 * t + 3));
  }
  EXPECT_THROW(family_D(2), std::invalid_argument);
  EXPECT_THROW(family_A(0), std::invalid_argument);
}

TEST(Chordal, Examples) {
  for (int n = 1; n <= 7; ++n) EXPECT_TRUE(is_chordal(complete_graph(n)));
  EXPECT_FALSE(is_chordal(cycle_graph(4)));
  EXPECT_TRUE(is_chordal(Graph(0)));
  for (int n = 4; n <= 14; ++n)
    for (int j = 1; j <= n / 2; ++j) {
      const bool expected = n == 2 * j || n == 3 * std::gcd(j, n);
      EXPECT_EQ(is_chordal(circulant(n, std::vector<int>{j})), expected) << n << " " << j;
      EXPECT_EQ(is_chordal(complement(circulant_without_jump(n, j))), expected) << n << " " << j;
    }
}

TEST(Chordal, AgreesWithInducedCycleSearch) {
  std::uint64_t seed = 2024;
  for (int k = 0; k < 400; ++k) {
    const Graph g = random_graph(seed, 1, 10);
    ASSERT_EQ(is_chordal(g), oracle::chordal(g)) << to_string(g);
  }
}

TEST(ClawGap, AgreeWithBruteForce) {
  const Graph claw = from(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_FALSE(is_claw_free(claw));
  for (int n = 2; n <= 8; ++n) EXPECT_TRUE(is_gap_free(complete_graph(n)));
  EXPECT_FALSE(is_gap_free(disjoint_union(complete_graph(2), complete_graph(2))));
  std::uint64_t seed = 99;
  for (int k = 0; k < 300; ++k) {
    const Graph g = random_graph(seed, 1, 9);
    ASSERT_EQ(is_claw_free(g), oracle::claw_free(g)) << to_string(g);
    ASSERT_EQ(is_gap_free(g), oracle::gap_free(g)) << to_string(g);
  }
}

TEST(ClawGap, CirculantsWithoutJumpAreClawFree) {
  for (int n = 5; n <= 16; ++n)
    for (int j = 1; j <= n / 2; ++j)
      if (n / std::gcd(j, n) >= 5) EXPECT_TRUE(is_claw_free(circulant_without_jump(n, j))) << n << " " << j;
}

TEST(CochordalCover, Examples) {
  const Graph c4 = cycle_graph(4);
  const std::vector<Graph> self{c4};
  EXPECT_TRUE(is_cochordal_cover(c4, self));
  EXPECT_FALSE(is_cochordal_cover(c4, std::span<const Graph>{}));
  EXPECT_TRUE(is_cochordal_cover(Graph(3), std::span<const Graph>{}));
  const std::vector<Graph> wrong{complete_graph(4)};
  EXPECT_THROW(is_cochordal_cover(c4, wrong), std::invalid_argument);
  const std::vector<Graph> size{complete_graph(3)};
  EXPECT_THROW(is_cochordal_cover(c4, size), std::invalid_argument);
  // C_5 has no single co-chordal cover: its complement is C_5.
  const std::vector<Graph> c5{cycle_graph(5)};
  EXPECT_FALSE(is_cochordal_cover(cycle_graph(5), c5));
}

TEST(CochordalCover, SplitOfC4j) {
  for (int j = 1; j <= 5; ++j) {
    const Graph g = circulant_without_jump(4 * j, j);
    const auto [g1, g2] = cochordal_split_C4j(j);
    const std::vector<Graph> parts{g1, g2};
    EXPECT_TRUE(is_cochordal_cover(g, parts)) << j;
    EXPECT_TRUE(is_chordal(complement(g1)));
    EXPECT_TRUE(is_chordal(complement(g2)));
  }
  // 2K_2 is not co-chordal (its complement is C_4); its edges are.
  const auto [e1, e2] = cochordal_split_C4j(1);
  EXPECT_EQ(e1.edges(), (std::vector<Edge>{{0, 2}}));
  EXPECT_EQ(e2.edges(), (std::vector<Edge>{{1, 3}}));
  const std::vector<Graph> whole{circulant_without_jump(4, 1)};
  EXPECT_FALSE(is_cochordal_cover(whole[0], whole));
  const auto [h1, h2] = cochordal_split_C4j(2);
  for (int a : {0, 1, 4, 5})
    for (int b : {0, 1, 4, 5})
      if (a < b) EXPECT_TRUE(h1.adjacent(a, b));
}
