// Graded Betti numbers of square-free monomial ideals via Hochster's
// formula, beta_{i,j}(I) = sum over |W| = j of dim H~_{j-i-2}(Delta_W).
//
// Two kernels compute the same table for edge ideals:
//   hochster_betti_table_serial  - reference: builds every restriction as a
//                                  SimplicialComplex and takes its homology.
//   hochster_betti_table         - OpenMP sweep over vertex subsets with cone
//                                  pruning and a shared homology memo.
// Tests hold the second to the first; bench/ compares their speed.

#ifndef CREG_BETTI_HPP
#define CREG_BETTI_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "creg/complex.hpp"
#include "creg/graph.hpp"
#include "creg/homology.hpp"

namespace creg {

inline constexpr int kDefaultVertexLimit = 20;

class BettiTable {
 public:
  struct Entry {
    int i;
    int j;
    std::int64_t value;
    bool operator==(const Entry&) const = default;
  };

  /// All-zero table for an ideal in n variables.
  BettiTable(int n, Field field);

  /// The zero ideal (edgeless graph): no entries, reg and pd undefined.
  static BettiTable zero_ideal(int n, Field field);

  int variables() const noexcept { return n_; }
  Field field() const noexcept { return field_; }
  bool is_zero_ideal() const noexcept { return zero_ideal_; }

  std::int64_t at(int i, int j) const;
  void add(int i, int j, std::int64_t value);

  /// max{j - i : beta_{i,j} != 0}. Throws for the zero ideal.
  int regularity() const;
  /// reg(R/I) = reg(I) - 1.
  int quotient_regularity() const { return regularity() - 1; }
  /// max{i : beta_{i,j} != 0}. Throws for the zero ideal.
  int projective_dimension() const;

  /// Non-zero entries ordered by (i, j).
  std::vector<Entry> nonzero_entries() const;

  bool operator==(const BettiTable&) const = default;

 private:
  int n_;
  Field field_;
  bool zero_ideal_ = false;
  std::vector<std::int64_t> entries_;  // (n+1) x (n+1), row i, column j
};

struct HochsterOptions {
  int workers = 0;  // 0: OpenMP default
  int vertex_limit = kDefaultVertexLimit;
  bool memoize = true;
};

/// Parallel kernel. Throws std::invalid_argument naming the limit when the
/// graph has more than options.vertex_limit vertices.
BettiTable hochster_betti_table(const Graph& g, Field field, const HochsterOptions& options = {});

/// Serial reference kernel.
BettiTable hochster_betti_table_serial(const Graph& g, Field field,
                                       int vertex_limit = kDefaultVertexLimit);

/// Betti table of the Stanley-Reisner ideal of an arbitrary complex. The
/// full simplex gives the zero ideal; the void complex is rejected.
BettiTable hochster_betti_table(const SimplicialComplex& delta, Field field,
                                int vertex_limit = kDefaultVertexLimit);

/// reg(R/I) with reg(R/0) = 0, so reg(I) = 1 for an edgeless graph.
int quotient_regularity_or_zero(const BettiTable& t);
/// pd(I) with pd(0) = -1 (pd(R/0) = 0).
int projective_dimension_or_minus_one(const BettiTable& t);

// ---------------------------------------------------------------------------
// Deciding reg(I) from bounds and the reduced Euler characteristic.

enum class PdBound {
  n_minus_r_plus_1,  // pd(I) <= n - r + 1
  n_minus_r,         // pd(I) <= n - r
};

enum class DecisionOutcome { regularity_determined, pd_determined, inconclusive };

struct RegDecision {
  DecisionOutcome outcome = DecisionOutcome::inconclusive;
  std::optional<int> regularity;
  std::optional<int> projective_dimension;
  // Inputs, echoed.
  int n = 0;
  int r = 0;
  PdBound bound = PdBound::n_minus_r_plus_1;
  std::int64_t chi = 0;
};

/// Caller certifies reg(I) <= r and the stated pd bound. Throws for r < 1 or
/// r > n.
RegDecision decide_regularity(int n, int r, PdBound bound, std::int64_t chi);

std::string to_string(DecisionOutcome o);

// ---------------------------------------------------------------------------
// Structural properties checked against computed tables.

using BettiOracle = std::function<BettiTable(const Graph&)>;

struct PropertyCheck {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string detail;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool all_passed() const;
};

struct PropertyInputs {
  std::optional<std::vector<Graph>> cochordal_cover;  // witness for reg <= s + 1
  std::optional<std::pair<Graph, Graph>> edge_split;  // G = H u K, same vertex set
};

/// Checks, on table `t` of g and oracle values for derived graphs:
///   additivity of reg(R/I) over connected components,
///   reg(I) = 2 iff the complement is chordal,
///   reg(I) <= |cover| + 1 for a supplied co-chordal cover,
///   gap-free and claw-free imply reg(I) <= 3,
///   reg(I(G)) in {reg(I(G - N[x])) + 1, reg(I(G - x))} for every vertex x,
///   reg(R/I) and pd(I) subadditivity for a supplied edge split.
PropertyReport property_suite(const Graph& g, const BettiTable& t, const BettiOracle& oracle,
                              const PropertyInputs& inputs = {});

}  // namespace creg

#endif  // CREG_BETTI_HPP
