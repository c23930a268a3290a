// Reduced simplicial homology over GF(p) or Q via the augmented chain
// complex: the empty face spans degree -1 and the boundary of a vertex is
// the empty face.

#ifndef CREG_HOMOLOGY_HPP
#define CREG_HOMOLOGY_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "creg/complex.hpp"
#include "creg/linalg.hpp"

namespace creg {

/// Coefficient field: GF(p) for a prime p, or the rationals.
class Field {
 public:
  /// GF(2).
  Field() = default;

  static Field gf(std::uint32_t p);
  static Field rationals() { return Field(0); }

  /// "2", "3", ... or "Q" (also "q", "0").
  static Field parse(std::string_view token);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }

  /// Same token parse() accepts: "2", "Q".
  std::string to_string() const;

  auto operator<=>(const Field&) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 2;
};

/// Signed boundary matrix from faces `upper` (columns) to `lower` (rows).
/// Entry (F minus its k-th smallest vertex, F) is (-1)^k. `lower` must be
/// sorted and contain every codimension-one face of every face in `upper`.
IntMatrix boundary_matrix(std::span<const FaceMask> lower, std::span<const FaceMask> upper);

/// Boundary maps d_0, ..., d_D of delta's augmented chain complex; d_i goes
/// from i-faces to (i-1)-faces.
std::vector<IntMatrix> chain_boundaries(const SimplicialComplex& delta);

std::size_t boundary_rank(std::span<const FaceMask> lower, std::span<const FaceMask> upper,
                          Field field);

/// dims[k] = dim H~_{k-1}; faces_by_size[k] lists the sorted faces with k
/// vertices, faces_by_size[0] = {∅}.
std::vector<std::int64_t> reduced_homology_from_faces(
    std::span<const std::vector<FaceMask>> faces_by_size, Field field);

/// Index i + 1 holds dim H~_i(delta; field) for i = -1..dim(delta).
/// Throws for the void complex.
std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& delta, Field field);

/// dim H~_degree only; computes just the two boundary ranks it needs.
std::int64_t reduced_homology_dim(const SimplicialComplex& delta, Field field, int degree);

/// sum_{i >= -1} (-1)^i dim H~_i(delta; field).
std::int64_t euler_from_homology(const SimplicialComplex& delta, Field field);

}  // namespace creg

#endif  // CREG_HOMOLOGY_HPP
