#include <gtest/gtest.h>

#include "creg/betti.hpp"
#include "creg/complex.hpp"
#include "creg/verify.hpp"
#include "support/oracle.hpp"

using namespace creg;

namespace {

std::map<std::pair<int, int>, int> as_map(const BettiTable& t) {
  std::map<std::pair<int, int>, int> m;
  for (const auto& e : t.nonzero_entries()) m[{e.i, e.j}] = static_cast<int>(e.value);
  return m;
}

HochsterOptions workers(int w, bool memo = true) {
  HochsterOptions o;
  o.workers = w;
  o.memoize = memo;
  return o;
}

}  // namespace

TEST(Betti, SmallTables) {
  const auto k3 = hochster_betti_table(complete_graph(3), Field{});
  EXPECT_EQ(as_map(k3), (std::map<std::pair<int, int>, int>{{{0, 2}, 3}, {{1, 3}, 2}}));
  const auto c4 = hochster_betti_table(cycle_graph(4), Field{});
  EXPECT_EQ(as_map(c4), (std::map<std::pair<int, int>, int>{{{0, 2}, 4}, {{1, 3}, 4}, {{2, 4}, 1}}));
  EXPECT_EQ(c4.regularity(), 2);
  EXPECT_EQ(c4.projective_dimension(), 2);
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(hochster_betti_table(complete_graph(n), Field{}).regularity(), 2);
}

TEST(Betti, LadderBaseValues) {
  const auto a1 = hochster_betti_table(family_A(1), Field{});
  EXPECT_EQ(a1.regularity(), 2);
  EXPECT_EQ(a1.projective_dimension(), 2);
  const auto a2 = hochster_betti_table(family_A(2), Field{});
  EXPECT_EQ(a2.regularity(), 3);
  EXPECT_EQ(a2.projective_dimension(), 4);
  EXPECT_EQ(hochster_betti_table(family_B(1), Field{}).regularity(), 2);
  EXPECT_EQ(hochster_betti_table(family_B(2), Field{}).regularity(), 3);
}

TEST(Betti, ZeroIdeal) {
  const auto t = hochster_betti_table(Graph(4), Field{});
  EXPECT_TRUE(t.is_zero_ideal());
  EXPECT_TRUE(t.nonzero_entries().empty());
  EXPECT_THROW(t.regularity(), std::logic_error);
  EXPECT_EQ(quotient_regularity_or_zero(t), 0);
  EXPECT_EQ(projective_dimension_or_minus_one(t), -1);
  EXPECT_EQ(t, hochster_betti_table_serial(Graph(4), Field{}));
}

TEST(Betti, VertexLimit) {
  HochsterOptions o;
  o.vertex_limit = 6;
  try {
    hochster_betti_table(cycle_graph(7), Field{}, o);
    FAIL() << "expected a throw";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find('6'), std::string::npos);
  }
  EXPECT_THROW(hochster_betti_table_serial(cycle_graph(7), Field{}, 6), std::invalid_argument);
}

TEST(Betti, EdgeCountAndKoszulOracle) {
  std::uint64_t seed = 77;
  for (int k = 0; k < 80; ++k) {
    const Graph g = random_graph(seed, 2, 7);
    const auto t = hochster_betti_table(g, Field{});
    if (g.size() == 0) {
      EXPECT_TRUE(t.is_zero_ideal());
      continue;
    }
    EXPECT_EQ(t.at(0, 2), static_cast<std::int64_t>(g.size()));
    EXPECT_EQ(as_map(t), oracle::koszul_betti(g)) << to_string(g);
  }
}

TEST(Betti, SerialMatchesParallel) {
  std::uint64_t seed = 123;
  for (int k = 0; k < 40; ++k) {
    const Graph g = random_graph(seed, 2, 11);
    for (Field f : {Field{}, Field::gf(3), Field::rationals()}) {
      const auto serial = hochster_betti_table_serial(g, f);
      EXPECT_EQ(hochster_betti_table(g, f, workers(1)), serial);
      EXPECT_EQ(hochster_betti_table(g, f, workers(8)), serial);
      EXPECT_EQ(hochster_betti_table(g, f, workers(3, false)), serial);
    }
  }
  const Graph m = moebius(6);
  EXPECT_EQ(hochster_betti_table(m, Field{}, workers(8)), hochster_betti_table_serial(m, Field{}));
}

TEST(Betti, LastColumnIsEulerCharacteristic) {
  // beta_{a,n} = dim H~_{n-a-2}(Ind G), so sum_a (-1)^(n-a) beta_{a,n} = chi.
  std::uint64_t seed = 9;
  std::vector<Graph> graphs{moebius(5), prism(5), circulant_without_jump(10, 3)};
  for (int k = 0; k < 20; ++k) graphs.push_back(random_graph(seed, 3, 10));
  for (const auto& g : graphs) {
    const auto t = hochster_betti_table(g, Field{});
    if (t.is_zero_ideal()) continue;
    const int n = g.order();
    std::int64_t sum = 0;
    for (int a = 0; a <= n; ++a) sum += ((n - a) % 2 == 0 ? 1 : -1) * t.at(a, n);
    EXPECT_EQ(sum, euler_via_independence(g)) << to_string(g);
  }
}

TEST(Betti, StanleyReisnerOfComplex) {
  const auto c4 = cycle_graph(4);
  EXPECT_EQ(hochster_betti_table(independence_complex(c4), Field{}), hochster_betti_table(c4, Field{}));
  EXPECT_TRUE(hochster_betti_table(independence_complex(Graph(3)), Field{}).is_zero_ideal());
  EXPECT_THROW(hochster_betti_table(SimplicialComplex::void_complex(3), Field{}), std::invalid_argument);
  // Boundary of a triangle: I = (x0 x1 x2), one generator of degree 3.
  std::vector<FaceMask> edges{0b011, 0b110, 0b101};
  const auto t = hochster_betti_table(SimplicialComplex::from_facets(3, edges), Field{});
  EXPECT_EQ(as_map(t), (std::map<std::pair<int, int>, int>{{{0, 3}, 1}}));
  EXPECT_EQ(t.regularity(), 3);
}

TEST(Betti, FieldDependenceIsVisible) {
  // The Stanley-Reisner ideal of the six-vertex RP^2 has a char-2 dependent
  // Betti table.
  std::vector<std::vector<int>> f{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                  {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}};
  std::vector<FaceMask> m;
  for (auto& v : f) m.push_back(vertices_to_mask(v, 6));
  const auto rp2 = SimplicialComplex::from_facets(6, m);
  const auto t2 = hochster_betti_table(rp2, Field{});
  const auto tq = hochster_betti_table(rp2, Field::rationals());
  EXPECT_NE(t2, tq);
  EXPECT_EQ(t2.regularity(), 4);
  EXPECT_EQ(tq.regularity(), 3);
}
