// Exact matrix rank over GF(2), GF(p) and Q.

#ifndef CREG_LINALG_HPP
#define CREG_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace creg {

/// Dense row-major integer matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

  std::int64_t& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Columns packed as bit vectors, the layout used for GF(2) boundary maps.
class Gf2Columns {
 public:
  Gf2Columns(int rows, int cols);

  void set(int r, int c) { col(c)[r / 64] |= std::uint64_t{1} << (r % 64); }
  void flip(int r, int c) { col(c)[r / 64] ^= std::uint64_t{1} << (r % 64); }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  /// Column reduction keyed on the lowest set bit. Consumes the matrix.
  std::size_t rank() &&;

 private:
  std::uint64_t* col(int c) { return bits_.data() + static_cast<std::size_t>(c) * words_; }

  int rows_;
  int cols_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

std::size_t rank_gf2(const IntMatrix& m);
std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p);

/// Fraction-free (Bareiss) elimination over arbitrary-precision integers.
std::size_t rank_rational(const IntMatrix& m);

bool is_prime(std::uint32_t p);

}  // namespace creg

#endif  // CREG_LINALG_HPP
