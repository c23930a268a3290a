#include "creg/homology.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace creg {

Field Field::gf(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field: " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view token) {
  if (token == "Q" || token == "q" || token == "0") return rationals();
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), p);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::invalid_argument("field: expected a prime or Q, got '" + std::string(token) + "'");
  return gf(p);
}

std::string Field::to_string() const { return is_rational() ? "Q" : std::to_string(p_); }

namespace {

int row_of(std::span<const FaceMask> lower, FaceMask face) {
  auto it = std::lower_bound(lower.begin(), lower.end(), face);
  if (it == lower.end() || *it != face)
    throw std::logic_error("boundary: face missing from the lower layer");
  return static_cast<int>(it - lower.begin());
}

std::size_t gf2_boundary_rank(std::span<const FaceMask> lower, std::span<const FaceMask> upper) {
  Gf2Columns cols(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
  for (int c = 0; c < static_cast<int>(upper.size()); ++c)
    for (FaceMask rest = upper[c]; rest; rest &= rest - 1)
      cols.set(row_of(lower, upper[c] & ~(rest & (~rest + 1))), c);
  return std::move(cols).rank();
}

}  // namespace

IntMatrix boundary_matrix(std::span<const FaceMask> lower, std::span<const FaceMask> upper) {
  IntMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
  for (int c = 0; c < static_cast<int>(upper.size()); ++c) {
    int k = 0;
    for (FaceMask rest = upper[c]; rest; rest &= rest - 1, ++k) {
      const FaceMask bit = rest & (~rest + 1);
      m.at(row_of(lower, upper[c] & ~bit), c) = (k % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

std::size_t boundary_rank(std::span<const FaceMask> lower, std::span<const FaceMask> upper,
                          Field field) {
  if (lower.empty() || upper.empty()) return 0;
  if (field.characteristic() == 2) return gf2_boundary_rank(lower, upper);
  const IntMatrix m = boundary_matrix(lower, upper);
  return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

std::vector<IntMatrix> chain_boundaries(const SimplicialComplex& delta) {
  const auto layers = delta.faces_by_size();
  std::vector<IntMatrix> out;
  for (std::size_t k = 1; k < layers.size(); ++k)
    out.push_back(boundary_matrix(layers[k - 1], layers[k]));
  return out;
}

std::vector<std::int64_t> reduced_homology_from_faces(
    std::span<const std::vector<FaceMask>> faces_by_size, Field field) {
  const std::size_t top = faces_by_size.size();
  // rank_below[k] = rank of the boundary out of the k-vertex faces.
  std::vector<std::int64_t> rank_below(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k)
    rank_below[k] = static_cast<std::int64_t>(
        boundary_rank(faces_by_size[k - 1], faces_by_size[k], field));
  std::vector<std::int64_t> dims(top, 0);
  for (std::size_t k = 0; k < top; ++k)
    dims[k] = static_cast<std::int64_t>(faces_by_size[k].size()) - rank_below[k] -
              rank_below[k + 1];
  return dims;
}

std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& delta, Field field) {
  if (delta.is_void()) throw std::logic_error("homology: the void complex has no homology");
  const auto layers = delta.faces_by_size();
  return reduced_homology_from_faces(layers, field);
}

std::int64_t reduced_homology_dim(const SimplicialComplex& delta, Field field, int degree) {
  if (delta.is_void()) throw std::logic_error("homology: the void complex has no homology");
  const auto layers = delta.faces_by_size();
  const int k = degree + 1;
  if (k < 0 || k >= static_cast<int>(layers.size())) return 0;
  const auto rank_out = [&](int size) -> std::int64_t {
    if (size < 1 || size >= static_cast<int>(layers.size())) return 0;
    return static_cast<std::int64_t>(boundary_rank(layers[size - 1], layers[size], field));
  };
  return static_cast<std::int64_t>(layers[k].size()) - rank_out(k) - rank_out(k + 1);
}

std::int64_t euler_from_homology(const SimplicialComplex& delta, Field field) {
  const auto dims = reduced_homology_dims(delta, field);
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) chi += (k % 2 == 0 ? -1 : 1) * dims[k];
  return chi;
}

}  // namespace creg
