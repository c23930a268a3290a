#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "creg/cache.hpp"
#include "creg/formulas.hpp"
#include "creg/io.hpp"
#include "creg/verify.hpp"

using namespace creg;

namespace {

std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("creg_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST(GraphJson, RoundTripAndValidation) {
  const Graph g = moebius(4);
  const Json j = graph_to_json(g);
  EXPECT_EQ(j["n"], 8);
  EXPECT_EQ(j["edges"][0], Json({0, 1}));
  EXPECT_EQ(graph_from_json(j), g);
  EXPECT_EQ(graph_from_json(Json::parse(R"({"n":3,"edges":[[2,0],[1,2]]})")),
            Graph::from_edges(3, std::vector<Edge>{{0, 2}, {1, 2}}));
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n":3,"edges":[[1,1]]})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n":3,"edges":[[0,1],[1,0]]})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n":3,"edges":[[0,5]]})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n":3,"edges":[[0,1,2]]})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"edges":[]})")), std::invalid_argument);
}

TEST(OtherJson, RoundTrips) {
  const auto d = independence_complex(moebius(4));
  EXPECT_EQ(complex_from_json(complex_to_json(d)), d);
  const IntPolynomial p{1, 6, 6};
  EXPECT_EQ(polynomial_to_json(p).dump(), R"({"coeffs":[1,6,6]})");
  EXPECT_EQ(polynomial_from_json(polynomial_to_json(p)), p);
  for (Field f : {Field{}, Field::gf(3), Field::rationals()}) {
    const auto t = hochster_betti_table(prism(3), f);
    EXPECT_EQ(betti_from_json(betti_to_json(t)), t);
  }
  const auto z = hochster_betti_table(Graph(3), Field{});
  const Json zj = betti_to_json(z);
  EXPECT_TRUE(zj["zero_ideal"].get<bool>());
  EXPECT_TRUE(zj["reg"].is_null());
  EXPECT_EQ(betti_from_json(zj), z);
}

TEST(BettiCsv, Layout) {
  const auto t = hochster_betti_table(cycle_graph(4), Field{});
  EXPECT_EQ(betti_to_csv(t), "i,0,1,2,3,4\n0,0,0,4,0,0\n1,0,0,0,4,0\n2,0,0,0,0,1\n");
  EXPECT_EQ(betti_to_csv(t, true), "i,0,1,2,3,4\n0,,,4,,\n1,,,,4,\n2,,,,,1\n");
  EXPECT_EQ(betti_to_csv(hochster_betti_table(Graph(2), Field{})), "zero_ideal\n");
}

TEST(GraphSpec, Families) {
  EXPECT_EQ(parse_graph_spec("circulant:10:1,3"), circulant(10, std::vector<int>{1, 3}));
  EXPECT_EQ(parse_graph_spec("moebius:4"), moebius(4));
  EXPECT_EQ(parse_graph_spec("prism:5"), prism(5));
  EXPECT_EQ(parse_graph_spec("A:2"), family_A(2));
  EXPECT_EQ(parse_graph_spec("B:3"), family_B(3));
  EXPECT_EQ(parse_graph_spec("D:3"), family_D(3));
  EXPECT_EQ(parse_graph_spec("complete:5"), complete_graph(5));
  EXPECT_EQ(parse_graph_spec("circulant:5:"), Graph(5));
  EXPECT_THROW(parse_graph_spec("moebius:x"), std::invalid_argument);
  EXPECT_THROW(parse_graph_spec("moebius:4:1"), std::invalid_argument);
  EXPECT_THROW(parse_graph_spec("torus:4"), std::invalid_argument);
  EXPECT_THROW(parse_graph_spec("/nonexistent/graph.json"), std::invalid_argument);
  EXPECT_THROW(parse_graph_spec("prism:4"), std::invalid_argument);
}

TEST(GraphSpec, JsonFile) {
  const auto dir = temp_dir("spec");
  const auto path = (dir / "g.json").string();
  std::ofstream(path) << graph_to_json(prism(5)).dump();
  EXPECT_EQ(parse_graph_spec(path), prism(5));
  std::ofstream(dir / "bad.json") << "{not json";
  EXPECT_THROW(parse_graph_spec((dir / "bad.json").string()), std::invalid_argument);
}

TEST(Cache, HitEqualsColdComputation) {
  const auto dir = temp_dir("cache");
  const BettiCache cache(dir);
  const Graph g = moebius(5);
  EXPECT_FALSE(cache.load(g, Field{}).has_value());
  const auto cold = hochster_betti_table(g, Field{});
  EXPECT_EQ(cache.get_or_compute(g, Field{}, {}), cold);
  EXPECT_TRUE(std::filesystem::exists(cache.entry_path(g, Field{})));
  EXPECT_EQ(cache.load(g, Field{}), cold);
  EXPECT_FALSE(cache.load(g, Field::gf(3)).has_value());
  EXPECT_NE(cache.entry_path(g, Field{}), cache.entry_path(g, Field::rationals()));
  EXPECT_NE(graph_hash(moebius(5)), graph_hash(prism(5)));
  EXPECT_EQ(graph_hash(moebius(5)), graph_hash(circulant(10, std::vector<int>{1, 5})));
}

TEST(Cache, IgnoresCorruptOrMismatchedEntries) {
  const auto dir = temp_dir("cache_bad");
  const BettiCache cache(dir);
  const Graph g = cycle_graph(5);
  std::ofstream(cache.entry_path(g, Field{})) << "garbage";
  EXPECT_FALSE(cache.load(g, Field{}).has_value());
  // An entry recorded for a different graph under this name is not used.
  const Json other = {{"graph", graph_to_json(cycle_graph(6))},
                      {"betti", betti_to_json(hochster_betti_table(cycle_graph(6), Field{}))}};
  std::ofstream(cache.entry_path(g, Field{})) << other.dump();
  EXPECT_FALSE(cache.load(g, Field{}).has_value());
}
