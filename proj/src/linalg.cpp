#include "creg/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace creg {

bool IntMatrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](std::int64_t v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const std::int64_t v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += v * b.at(k, j);
    }
  return c;
}

Gf2Columns::Gf2Columns(int rows, int cols)
    : rows_(rows), cols_(cols), words_((rows + 63) / 64),
      bits_(static_cast<std::size_t>(cols) * ((rows + 63) / 64), 0) {}

std::size_t Gf2Columns::rank() && {
  std::vector<int> pivot_col(rows_, -1);
  std::size_t rank = 0;
  for (int c = 0; c < cols_; ++c) {
    std::uint64_t* v = col(c);
    for (;;) {
      int w = 0;
      while (w < words_ && v[w] == 0) ++w;
      if (w == words_) break;
      const int low = w * 64 + std::countr_zero(v[w]);
      const int owner = pivot_col[low];
      if (owner < 0) {
        pivot_col[low] = c;
        ++rank;
        break;
      }
      const std::uint64_t* p = col(owner);
      for (int k = w; k < words_; ++k) v[k] ^= p[k];
    }
  }
  return rank;
}

std::size_t rank_gf2(const IntMatrix& m) {
  Gf2Columns cols(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (m.at(r, c) & 1) cols.set(r, c);
  return std::move(cols).rank();
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: modulus is not prime");
  if (p == 2) return rank_gf2(m);
  const std::int64_t sp = p;
  std::vector<std::uint64_t> a(m.data.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<std::uint64_t>(((m.data[i] % sp) + sp) % sp);
  auto at = [&](int r, int c) -> std::uint64_t& { return a[static_cast<std::size_t>(r) * m.cols + c]; };

  std::size_t rank = 0;
  for (int c = 0; c < m.cols && static_cast<int>(rank) < m.rows; ++c) {
    const int r0 = static_cast<int>(rank);
    int piv = r0;
    while (piv < m.rows && at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r0)
      for (int j = c; j < m.cols; ++j) std::swap(at(piv, j), at(r0, j));
    const std::uint64_t inv = pow_mod(at(r0, c), p - 2, p);
    for (int j = c; j < m.cols; ++j) at(r0, j) = at(r0, j) * inv % p;
    for (int i = r0 + 1; i < m.rows; ++i) {
      const std::uint64_t f = at(i, c);
      if (f == 0) continue;
      for (int j = c; j < m.cols; ++j) at(i, j) = (at(i, j) + (p - f) * at(r0, j)) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const IntMatrix& m) {
  using boost::multiprecision::cpp_int;
  std::vector<cpp_int> a(m.data.begin(), m.data.end());
  auto at = [&](int r, int c) -> cpp_int& { return a[static_cast<std::size_t>(r) * m.cols + c]; };

  cpp_int prev = 1;
  std::size_t rank = 0;
  for (int c = 0; c < m.cols && static_cast<int>(rank) < m.rows; ++c) {
    const int r0 = static_cast<int>(rank);
    int piv = r0;
    while (piv < m.rows && at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r0)
      for (int j = c; j < m.cols; ++j) std::swap(at(piv, j), at(r0, j));
    // Every update divides exactly by the previous pivot.
    for (int i = r0 + 1; i < m.rows; ++i) {
      for (int j = c + 1; j < m.cols; ++j)
        at(i, j) = (at(r0, c) * at(i, j) - at(i, c) * at(r0, j)) / prev;
      at(i, c) = 0;
    }
    prev = at(r0, c);
    ++rank;
  }
  return rank;
}

}  // namespace creg
