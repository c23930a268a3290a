#include "creg/complex.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>

namespace creg {

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxComplexVertices)
    throw std::invalid_argument("complex: vertex count " + std::to_string(n) +
                                " outside 0..64");
}

FaceMask all_vertices(int n) { return n == 64 ? ~FaceMask{0} : (FaceMask{1} << n) - 1; }

// Inclusion-maximal elements of `sets`, sorted and deduplicated.
std::vector<FaceMask> maximal_sets(std::vector<FaceMask> sets) {
  std::sort(sets.begin(), sets.end(),
            [](FaceMask a, FaceMask b) {
              const int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa > pb : a < b;
            });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<FaceMask> out;
  for (FaceMask s : sets) {
    const bool covered =
        std::any_of(out.begin(), out.end(), [s](FaceMask f) { return (s & ~f) == 0; });
    if (!covered) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> neighbour_masks(const Graph& g) {
  if (g.order() > kMaxComplexVertices)
    throw std::invalid_argument("complex: graphs above 64 vertices are not supported");
  std::vector<std::uint64_t> nbr(g.order());
  for (int v = 0; v < g.order(); ++v) nbr[v] = g.row64(v);
  return nbr;
}

}  // namespace

std::vector<int> mask_to_vertices(FaceMask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

FaceMask vertices_to_mask(std::span<const int> vs, int vertex_count) {
  FaceMask m = 0;
  for (int v : vs) {
    if (v < 0 || v >= vertex_count)
      throw std::out_of_range("complex: vertex " + std::to_string(v) + " out of range");
    m |= FaceMask{1} << v;
  }
  return m;
}

// ---------------------------------------------------------------------------

SimplicialComplex SimplicialComplex::void_complex(int vertex_count) {
  check_vertex_count(vertex_count);
  SimplicialComplex c;
  c.n_ = vertex_count;
  return c;
}

SimplicialComplex SimplicialComplex::from_facets(int vertex_count,
                                                 std::span<const FaceMask> facets) {
  check_vertex_count(vertex_count);
  const FaceMask universe = all_vertices(vertex_count);
  for (FaceMask f : facets)
    if (f & ~universe) throw std::out_of_range("complex: facet uses a vertex out of range");
  SimplicialComplex c;
  c.n_ = vertex_count;
  c.facets_ = maximal_sets({facets.begin(), facets.end()});
  return c;
}

bool SimplicialComplex::contains(FaceMask face) const noexcept {
  return std::any_of(facets_.begin(), facets_.end(),
                     [face](FaceMask f) { return (face & ~f) == 0; });
}

int SimplicialComplex::dimension() const {
  if (is_void()) throw std::logic_error("complex: the void complex has no dimension");
  int best = 0;
  for (FaceMask f : facets_) best = std::max(best, std::popcount(f));
  return best - 1;
}

void SimplicialComplex::for_each_face(const std::function<void(FaceMask)>& visit) const {
  if (is_void()) return;
  // Depth-first over increasing vertices; downward closure makes pruning at
  // the first non-face exact.
  auto walk = [&](auto& self, FaceMask face, int next) -> void {
    visit(face);
    for (int v = next; v < n_; ++v) {
      const FaceMask grown = face | (FaceMask{1} << v);
      if (contains(grown)) self(self, grown, v + 1);
    }
  };
  walk(walk, 0, 0);
}

std::vector<std::vector<FaceMask>> SimplicialComplex::faces_by_size() const {
  if (is_void()) return {};
  std::vector<std::vector<FaceMask>> out(static_cast<std::size_t>(dimension()) + 2);
  std::size_t total = 0;
  for_each_face([&](FaceMask f) {
    if (++total > kMaxMaterializedFaces)
      throw std::length_error("complex: more than 2^20 faces; use for_each_face");
    out[std::popcount(f)].push_back(f);
  });
  for (auto& layer : out) std::sort(layer.begin(), layer.end());
  return out;
}

// ---------------------------------------------------------------------------

SimplicialComplex independence_complex(const Graph& g) {
  const auto nbr = neighbour_masks(g);
  const FaceMask universe = all_vertices(g.order());
  std::vector<FaceMask> facets;
  detail::for_each_independent_set(nbr, universe, [&](FaceMask s) {
    // Maximal iff every outside vertex has a neighbour in s.
    FaceMask blocked = s;
    for (FaceMask rest = s; rest; rest &= rest - 1) blocked |= nbr[std::countr_zero(rest)];
    if (blocked == universe) facets.push_back(s);
  });
  return SimplicialComplex::from_facets(g.order(), facets);
}

SimplicialComplex restriction(const SimplicialComplex& delta, FaceMask w) {
  if (w & ~all_vertices(delta.vertex_count()))
    throw std::out_of_range("restriction: vertex set out of range");
  if (delta.is_void()) return delta;
  std::vector<FaceMask> cut;
  cut.reserve(delta.facets().size());
  for (FaceMask f : delta.facets()) cut.push_back(f & w);
  return SimplicialComplex::from_facets(delta.vertex_count(), cut);
}

SimplicialComplex restriction(const SimplicialComplex& delta, std::span<const int> w) {
  return restriction(delta, vertices_to_mask(w, delta.vertex_count()));
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& delta) {
  if (delta.is_void()) throw std::logic_error("f_vector: the void complex has no f-vector");
  std::vector<std::int64_t> f(static_cast<std::size_t>(delta.dimension()) + 2, 0);
  delta.for_each_face([&](FaceMask face) { ++f[std::popcount(face)]; });
  return f;
}

std::int64_t euler_characteristic_f(const SimplicialComplex& delta) {
  const auto f = f_vector(delta);
  std::int64_t chi = 0;
  // f[k] counts faces of dimension k - 1, which carry sign (-1)^(k-1).
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? -1 : 1) * f[k];
  return chi;
}

IntPolynomial independence_polynomial(const Graph& g) {
  const auto nbr = neighbour_masks(g);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(g.order()) + 1, 0);
  detail::for_each_independent_set(nbr, all_vertices(g.order()),
                                   [&](FaceMask s) { ++counts[std::popcount(s)]; });
  return IntPolynomial(std::move(counts));
}

std::int64_t euler_via_independence(const Graph& g) {
  return -independence_polynomial(g).evaluate(-1);
}

// ---------------------------------------------------------------------------

std::vector<FaceMask> stanley_reisner_nonfaces(const SimplicialComplex& delta) {
  if (delta.is_void()) return {FaceMask{0}};
  std::set<FaceMask> out;
  delta.for_each_face([&](FaceMask face) {
    for (int v = 0; v < delta.vertex_count(); ++v) {
      const FaceMask bit = FaceMask{1} << v;
      if (face & bit) continue;
      const FaceMask cand = face | bit;
      if (delta.contains(cand)) continue;
      bool minimal = true;
      for (FaceMask rest = cand; rest && minimal; rest &= rest - 1) {
        const FaceMask drop = rest & (~rest + 1);
        minimal = delta.contains(cand & ~drop);
      }
      if (minimal) out.insert(cand);
    }
  });
  return {out.begin(), out.end()};
}

SimplicialComplex complex_from_squarefree_generators(
    int n, std::span<const std::vector<int>> generators) {
  check_vertex_count(n);
  std::vector<FaceMask> gens;
  for (const auto& gen : generators) {
    FaceMask m = 0;
    for (int v : gen) {
      if (v < 0 || v >= n)
        throw std::out_of_range("generators: vertex " + std::to_string(v) + " out of range");
      const FaceMask bit = FaceMask{1} << v;
      if (m & bit)
        throw std::invalid_argument("generators: vertex " + std::to_string(v) +
                                    " repeated; generators must be square-free");
      m |= bit;
    }
    gens.push_back(m);
  }
  if (std::find(gens.begin(), gens.end(), FaceMask{0}) != gens.end())
    return SimplicialComplex::void_complex(n);

  // Faces avoid every generator; enumerate them depth-first and keep the
  // maximal ones.
  std::vector<FaceMask> faces;
  auto walk = [&](auto& self, FaceMask face, int next) -> void {
    faces.push_back(face);
    for (int v = next; v < n; ++v) {
      const FaceMask grown = face | (FaceMask{1} << v);
      const bool hits = std::any_of(gens.begin(), gens.end(), [grown](FaceMask g) {
        return (g & ~grown) == 0;
      });
      if (!hits) self(self, grown, v + 1);
    }
  };
  walk(walk, 0, 0);
  return SimplicialComplex::from_facets(n, faces);
}

// ---------------------------------------------------------------------------
// Transfer matrix for circular ladders.
//
// Rung k of the ladder holds a top and a bottom vertex; a rung is in one of
// three states: 0 = empty, 1 = top chosen, 2 = bottom chosen (never both,
// the rung is an edge). Consecutive rungs may not choose the same side. A
// transition into a non-empty state carries weight x. moebius(n) has rungs
// {k, k+n} and its seam from rung n-1 back to rung 0 swaps top and bottom;
// prism(n) has rungs {2k, 2k+n} and closes without a twist.

namespace {

using PolyMatrix = std::array<std::array<IntPolynomial, 3>, 3>;

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

PolyMatrix rung_transfer(bool twisted) {
  const IntPolynomial one{1};
  const IntPolynomial x{0, 1};
  auto swap_side = [](int s) { return s == 0 ? 0 : 3 - s; };
  PolyMatrix m;
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) {
      const int seen = twisted ? swap_side(t) : t;
      const bool clash = s != 0 && s == seen;
      if (!clash) m[s][t] = t == 0 ? one : x;
    }
  return m;
}

}  // namespace

IntPolynomial ladder_indpoly_transfer(CubicKind kind, int n) {
  if (kind == CubicKind::moebius && n < 2)
    throw std::invalid_argument("ladder_indpoly_transfer: moebius needs n >= 2");
  if (kind == CubicKind::prism && (n < 3 || n % 2 == 0))
    throw std::invalid_argument("ladder_indpoly_transfer: prism needs odd n >= 3");

  const PolyMatrix step = rung_transfer(false);
  PolyMatrix acc;
  for (int i = 0; i < 3; ++i) acc[i][i] = IntPolynomial{1};
  for (int k = 0; k + 1 < n; ++k) acc = multiply(acc, step);
  acc = multiply(acc, rung_transfer(kind == CubicKind::moebius));

  IntPolynomial trace;
  for (int i = 0; i < 3; ++i) trace += acc[i][i];
  return trace;
}

}  // namespace creg
