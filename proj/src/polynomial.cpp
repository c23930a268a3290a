#include "creg/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace creg {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("IntPolynomial: overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("IntPolynomial: overflow");
  return r;
}

}  // namespace

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) {
  trim();
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(std::int64_t c, int degree) {
  if (degree < 0) throw std::invalid_argument("IntPolynomial: negative degree");
  std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::coeff(int r) const noexcept {
  return (r < 0 || r > degree()) ? 0 : coeffs_[static_cast<std::size_t>(r)];
}

std::int64_t IntPolynomial::evaluate(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = checked_add(checked_mul(acc, x), *it);
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] = checked_add(coeffs_[i], checked_mul(-1, o.coeffs_[i]));
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<std::int64_t> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial IntPolynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("IntPolynomial: negative exponent");
  IntPolynomial result{1};
  for (int i = 0; i < e; ++i) result *= *this;
  return result;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t r = 0; r < coeffs_.size(); ++r) {
    std::int64_t c = coeffs_[r];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (r == 0 || mag != 1) os << mag;
    if (r >= 1) os << "x";
    if (r >= 2) os << "^" << r;
    first = false;
  }
  return os.str();
}

}  // namespace creg
