// Simplicial complexes on at most 64 vertices, with faces stored as bit
// masks, plus the independence-complex side of the edge-ideal dictionary:
// Ind(G), f-vectors, independence polynomials and reduced Euler
// characteristics.

#ifndef CREG_COMPLEX_HPP
#define CREG_COMPLEX_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "creg/graph.hpp"
#include "creg/polynomial.hpp"

namespace creg {

using FaceMask = std::uint64_t;

inline constexpr int kMaxComplexVertices = 64;

/// Face families materialized by faces_by_size() are capped at this many
/// faces; larger complexes are only walked through for_each_face().
inline constexpr std::size_t kMaxMaterializedFaces = std::size_t{1} << 20;

std::vector<int> mask_to_vertices(FaceMask m);
FaceMask vertices_to_mask(std::span<const int> vs, int vertex_count);

/// A downward-closed family of subsets of {0..vertex_count-1}, stored by its
/// facets. The void complex (no faces at all) and {∅} are distinct: the first
/// has no facets, the second has the single facet 0.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex void_complex(int vertex_count);

  /// Keeps only the inclusion-maximal masks. An empty list gives the void
  /// complex.
  static SimplicialComplex from_facets(int vertex_count, std::span<const FaceMask> facets);

  int vertex_count() const noexcept { return n_; }
  bool is_void() const noexcept { return facets_.empty(); }

  /// Sorted facets.
  const std::vector<FaceMask>& facets() const noexcept { return facets_; }

  bool contains(FaceMask face) const noexcept;

  /// Largest face size minus one; -1 for {∅}. Throws for the void complex.
  int dimension() const;

  /// Visits every face once, in depth-first order over increasing vertices.
  void for_each_face(const std::function<void(FaceMask)>& visit) const;

  /// faces_by_size()[k] holds the sorted faces with k vertices (k = 0 is the
  /// empty face). Throws std::length_error above kMaxMaterializedFaces.
  std::vector<std::vector<FaceMask>> faces_by_size() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int n_ = 0;
  std::vector<FaceMask> facets_;
};

/// Faces are the independent sets of g. Requires g.order() <= 64.
SimplicialComplex independence_complex(const Graph& g);

/// Faces of delta contained in W. Restricting a non-void complex to the empty
/// set gives {∅}.
SimplicialComplex restriction(const SimplicialComplex& delta, FaceMask w);
SimplicialComplex restriction(const SimplicialComplex& delta, std::span<const int> w);

/// (f_{-1}, f_0, ..., f_D) with f_{-1} = 1. Throws for the void complex.
std::vector<std::int64_t> f_vector(const SimplicialComplex& delta);

/// sum_{i >= -1} (-1)^i f_i. Throws for the void complex.
std::int64_t euler_characteristic_f(const SimplicialComplex& delta);

IntPolynomial independence_polynomial(const Graph& g);

/// -I(g, -1), the reduced Euler characteristic of Ind(g).
std::int64_t euler_via_independence(const Graph& g);

/// Minimal non-faces, sorted; these generate the Stanley-Reisner ideal.
std::vector<FaceMask> stanley_reisner_nonfaces(const SimplicialComplex& delta);

/// Delta(I) for the ideal generated by the given square-free monomials, each
/// given as its support. Non-minimal generators are dropped. Throws on a
/// repeated or out-of-range vertex inside a generator.
SimplicialComplex complex_from_squarefree_generators(int n,
                                                     std::span<const std::vector<int>> generators);

/// Independence polynomial of moebius(n) or prism(n) from a three-state
/// transfer matrix around the ladder (see complex.cpp for the state
/// convention). Independent of the subset enumeration.
IntPolynomial ladder_indpoly_transfer(CubicKind kind, int n);

namespace detail {

template <typename Visit>
void independent_sets_from(std::span<const std::uint64_t> nbr, std::uint64_t set,
                           std::uint64_t cand, Visit& visit) {
  visit(set);
  while (cand) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    // Only later vertices remain candidates, so each set is reached once.
    independent_sets_from(nbr, set | (std::uint64_t{1} << v), cand & ~nbr[v], visit);
  }
}

/// Calls visit(set) for every independent set of the graph given by
/// neighbour masks `nbr`, restricted to `allowed`, the empty set included.
template <typename Visit>
void for_each_independent_set(std::span<const std::uint64_t> nbr, std::uint64_t allowed,
                              Visit&& visit) {
  independent_sets_from(nbr, 0, allowed, visit);
}

}  // namespace detail

}  // namespace creg

#endif  // CREG_COMPLEX_HPP
