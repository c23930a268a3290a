// Verification sweeps: closed forms and bounds against brute-force Betti
// tables, with a machine-readable report.

#ifndef CREG_VERIFY_HPP
#define CREG_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "creg/betti.hpp"
#include "creg/cache.hpp"
#include "creg/io.hpp"

namespace creg {

/// How an instance's expected value is compared with its oracle value.
enum class Relation {
  equal,       // oracle == expected
  at_most,     // oracle <= expected (upper bounds)
};

struct ChiTriple {
  std::int64_t f_vector = 0;
  std::int64_t homology = 0;
  std::int64_t indpoly = 0;  // -I(G, -1)
  bool consistent() const { return f_vector == homology && homology == indpoly; }
};

struct VerifyInstance {
  std::string label;
  Json inputs;
  Json expected;
  Json oracle;
  Relation relation = Relation::equal;
  std::optional<ChiTriple> chi;
  bool passed = false;
  std::string note;
  double seconds = 0.0;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyInstance> instances;
  Json extra = Json::object();  // suite-level findings, e.g. the Hoshino winner
  bool suite_ok = true;         // suite-level condition besides the instances

  std::size_t passed_count() const;
  std::size_t failed_count() const;
  std::size_t chi_mismatch_count() const;
  bool all_passed() const;
  /// Wall-clock times are omitted unless include_timing, so that equal inputs
  /// give byte-identical reports.
  Json to_json(bool include_timing = false) const;
};

struct VerifyOptions {
  int nmin = 0;  // 0: suite default
  int nmax = 0;  // 0: suite default
  std::uint64_t seed = 1;
  int count = 200;  // properties suite
  Field field;
  HochsterOptions hochster;
  const BettiCache* cache = nullptr;
};

/// reg(I(C_n minus jump j)) against the closed form; n in 4..12 by default.
VerifyReport verify_theorem1(const VerifyOptions& opts);
/// reg(I(C_{2n}(a, n))) against the closed form, directly and through the
/// Davis-Domke decomposition; n in 2..7 by default.
VerifyReport verify_theorem2(const VerifyOptions& opts);
/// Ladder family bounds (t up to 5) and moebius/prism bounds (n up to 7).
VerifyReport verify_lemmas(const VerifyOptions& opts);
/// Hoshino exponent arbitration and transfer-matrix agreement; n up to 8.
VerifyReport verify_hoshino(const VerifyOptions& opts);
/// Random graphs with at most nmax (default 9) vertices through property_suite.
VerifyReport verify_properties(const VerifyOptions& opts);

VerifyReport run_verify_suite(const std::string& suite, const VerifyOptions& opts);

/// Seeded G(n, p) style graphs; independent of the standard library's
/// distribution implementations.
Graph random_graph(std::uint64_t& state, int min_order, int max_order);

/// Table lookup honouring the cache when one is set.
BettiTable compute_betti(const Graph& g, const VerifyOptions& opts);

ChiTriple chi_triple(const Graph& g, Field field);

}  // namespace creg

#endif  // CREG_VERIFY_HPP
