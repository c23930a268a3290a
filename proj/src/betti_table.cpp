#include <algorithm>
#include <bit>
#include <stdexcept>

#include "creg/betti.hpp"

namespace creg {

BettiTable::BettiTable(int n, Field field)
    : n_(n), field_(field),
      entries_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0) {
  if (n < 0) throw std::invalid_argument("BettiTable: negative variable count");
}

BettiTable BettiTable::zero_ideal(int n, Field field) {
  BettiTable t(n, field);
  t.zero_ideal_ = true;
  return t;
}

std::int64_t BettiTable::at(int i, int j) const {
  if (i < 0 || j < 0 || i > n_ || j > n_) return 0;
  return entries_[static_cast<std::size_t>(i) * (n_ + 1) + j];
}

void BettiTable::add(int i, int j, std::int64_t value) {
  if (i < 0 || j < 0 || i > n_ || j > n_) throw std::out_of_range("BettiTable: index out of range");
  if (zero_ideal_) throw std::logic_error("BettiTable: the zero ideal has no entries");
  entries_[static_cast<std::size_t>(i) * (n_ + 1) + j] += value;
}

int BettiTable::regularity() const {
  if (zero_ideal_) throw std::logic_error("regularity: undefined for the zero ideal");
  int best = -1;
  bool any = false;
  for (const auto& e : nonzero_entries()) {
    best = any ? std::max(best, e.j - e.i) : e.j - e.i;
    any = true;
  }
  if (!any) throw std::logic_error("regularity: empty Betti table");
  return best;
}

int BettiTable::projective_dimension() const {
  if (zero_ideal_) throw std::logic_error("projective_dimension: undefined for the zero ideal");
  int best = -1;
  for (const auto& e : nonzero_entries()) best = std::max(best, e.i);
  if (best < 0) throw std::logic_error("projective_dimension: empty Betti table");
  return best;
}

std::vector<BettiTable::Entry> BettiTable::nonzero_entries() const {
  std::vector<Entry> out;
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= n_; ++j)
      if (const auto v = at(i, j); v != 0) out.push_back({i, j, v});
  return out;
}

int quotient_regularity_or_zero(const BettiTable& t) {
  return t.is_zero_ideal() ? 0 : t.quotient_regularity();
}

int projective_dimension_or_minus_one(const BettiTable& t) {
  return t.is_zero_ideal() ? -1 : t.projective_dimension();
}

namespace {

void check_limit(int n, int limit) {
  if (n > limit)
    throw std::invalid_argument("hochster: " + std::to_string(n) +
                                " vertices exceeds the vertex limit of " + std::to_string(limit));
  if (n > kMaxComplexVertices)
    throw std::invalid_argument("hochster: at most 64 vertices are supported");
}

void accumulate(BettiTable& t, int j, const std::vector<std::int64_t>& dims) {
  // dims[k] = dim H~_{k-1}; contributes to beta_{i,j} with i = j - (k-1) - 2.
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] == 0) continue;
    const int i = j - static_cast<int>(k) - 1;
    if (i >= 0) t.add(i, j, dims[k]);
  }
}

}  // namespace

BettiTable hochster_betti_table_serial(const Graph& g, Field field, int vertex_limit) {
  const int n = g.order();
  check_limit(n, vertex_limit);
  if (g.size() == 0) return BettiTable::zero_ideal(n, field);

  BettiTable t(n, field);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t w = 1; w < subsets; ++w) {
    const auto vertices = mask_to_vertices(w);
    const auto sub = induced_subgraph(g, vertices);
    accumulate(t, static_cast<int>(vertices.size()),
               reduced_homology_dims(independence_complex(sub.graph), field));
  }
  return t;
}

BettiTable hochster_betti_table(const SimplicialComplex& delta, Field field, int vertex_limit) {
  const int n = delta.vertex_count();
  check_limit(n, vertex_limit);
  if (delta.is_void())
    throw std::invalid_argument("hochster: the void complex corresponds to the unit ideal");
  const FaceMask all = n == 64 ? ~FaceMask{0} : (FaceMask{1} << n) - 1;
  if (delta.contains(all)) return BettiTable::zero_ideal(n, field);

  const auto layers = delta.faces_by_size();
  BettiTable t(n, field);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t w = 1; w < subsets; ++w) {
    std::vector<std::vector<FaceMask>> restricted;
    for (const auto& layer : layers) {
      std::vector<FaceMask> keep;
      std::copy_if(layer.begin(), layer.end(), std::back_inserter(keep),
                   [w](FaceMask f) { return (f & ~w) == 0; });
      if (keep.empty()) break;
      restricted.push_back(std::move(keep));
    }
    accumulate(t, std::popcount(w), reduced_homology_from_faces(restricted, field));
  }
  return t;
}

}  // namespace creg
