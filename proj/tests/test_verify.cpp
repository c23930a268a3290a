#include <gtest/gtest.h>

#include <filesystem>

#include "creg/verify.hpp"

using namespace creg;

namespace {

VerifyOptions opts_with(int workers) {
  VerifyOptions o;
  o.hochster.workers = workers;
  return o;
}

void expect_consistent(const VerifyReport& r) {
  const Json j = r.to_json();
  const auto& s = j["summary"];
  EXPECT_EQ(s["total"].get<std::size_t>(), r.instances.size());
  EXPECT_EQ(s["passed"].get<std::size_t>() + s["failed"].get<std::size_t>(), r.instances.size());
  std::size_t passed = 0;
  for (const auto& in : j["instances"]) passed += in["pass"].get<bool>();
  EXPECT_EQ(s["passed"].get<std::size_t>(), passed);
  for (const auto& in : r.instances)
    if (in.relation == Relation::equal && in.note.empty()) EXPECT_EQ(in.passed, in.expected == in.oracle);
}

}  // namespace

TEST(Verify, SuitesPassAndAreConsistent) {
  for (const char* suite : {"theorem1", "theorem2", "lemmas", "hoshino"}) {
    const auto r = run_verify_suite(suite, opts_with(0));
    EXPECT_TRUE(r.all_passed()) << suite;
    EXPECT_FALSE(r.instances.empty());
    expect_consistent(r);
  }
  auto o = opts_with(0);
  o.count = 40;
  const auto p = verify_properties(o);
  EXPECT_TRUE(p.all_passed());
  EXPECT_EQ(p.instances.size(), 40u);
  expect_consistent(p);
}

TEST(Verify, HoshinoWinner) {
  const auto r = verify_hoshino({});
  EXPECT_EQ(r.extra["winning_variant"], "corrected");
  EXPECT_FALSE(r.extra["printed_matches_all"].get<bool>());
}

TEST(Verify, Theorem1Coverage) {
  const auto r = verify_theorem1({});
  std::size_t expected = 0;
  for (int n = 4; n <= 12; ++n) expected += n / 2;
  EXPECT_EQ(r.instances.size(), expected);
  for (const auto& in : r.instances) EXPECT_TRUE(in.chi->consistent());
}

TEST(Verify, ByteIdenticalAcrossWorkers) {
  for (const char* suite : {"theorem2", "properties"}) {
    auto a = opts_with(1), b = opts_with(8);
    a.count = b.count = 30;
    a.seed = b.seed = 77;
    EXPECT_EQ(run_verify_suite(suite, a).to_json().dump(), run_verify_suite(suite, b).to_json().dump());
  }
}

TEST(Verify, SeedChangesPropertiesSample) {
  VerifyOptions a, b;
  a.count = b.count = 10;
  b.seed = 2;
  EXPECT_NE(verify_properties(a).to_json().dump(), verify_properties(b).to_json().dump());
  EXPECT_EQ(verify_properties(a).to_json().dump(), verify_properties(a).to_json().dump());
}

TEST(Verify, TimingOnlyWhenAsked) {
  VerifyOptions o;
  o.nmax = 5;
  const auto r = verify_theorem1(o);
  EXPECT_FALSE(r.to_json()["instances"][0].contains("seconds"));
  EXPECT_TRUE(r.to_json(true)["instances"][0].contains("seconds"));
}

TEST(Verify, BadRanges) {
  VerifyOptions o;
  o.nmin = 3;
  EXPECT_THROW(verify_theorem1(o), std::invalid_argument);
  o.nmin = 0;
  o.nmax = 30;
  EXPECT_THROW(verify_theorem1(o), std::invalid_argument);
  o.nmax = 11;
  EXPECT_THROW(verify_theorem2(o), std::invalid_argument);
  EXPECT_THROW(run_verify_suite("nope", {}), std::invalid_argument);
}

TEST(Verify, CachedRunMatchesCold) {
  const auto dir = std::filesystem::temp_directory_path() / "creg_verify_cache";
  std::filesystem::remove_all(dir);
  const BettiCache cache(dir);
  VerifyOptions cold, warm;
  warm.cache = &cache;
  const auto reference = verify_theorem2(cold).to_json().dump();
  EXPECT_EQ(verify_theorem2(warm).to_json().dump(), reference);  // fills the cache
  EXPECT_EQ(verify_theorem2(warm).to_json().dump(), reference);  // served from it
}

TEST(Verify, RandomGraphRange) {
  std::uint64_t s = 1;
  for (int k = 0; k < 100; ++k) {
    const Graph g = random_graph(s, 3, 6);
    EXPECT_GE(g.order(), 3);
    EXPECT_LE(g.order(), 6);
  }
}
