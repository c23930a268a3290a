#ifndef CREG_POLYNOMIAL_HPP
#define CREG_POLYNOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace creg {

/// Univariate polynomial with int64 coefficients; coeff(r) multiplies x^r.
/// Trailing zeros are always trimmed, so equal polynomials compare equal.
/// Arithmetic throws std::overflow_error rather than wrapping.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> coeffs);
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);

  static IntPolynomial monomial(std::int64_t c, int degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t coeff(int r) const noexcept;
  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

  std::int64_t evaluate(std::int64_t x) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  bool operator==(const IntPolynomial&) const = default;

  IntPolynomial pow(int e) const;

  /// "1 + 6x + 6x^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace creg

#endif  // CREG_POLYNOMIAL_HPP
