#include "creg/formulas.hpp"

#include <numeric>
#include <stdexcept>

namespace creg {

int reg_hat_j(int n, int j) {
  if (n < 4) throw std::invalid_argument("reg_hat_j: need n >= 4");
  if (j < 1 || j > n / 2) throw std::invalid_argument("reg_hat_j: j outside 1..floor(n/2)");
  const int d = std::gcd(j, n);
  return (n == 2 * j || n == 3 * d) ? 2 : 3;
}

CubicParams::CubicParams(int n, int a) : n_(n), a_(a) {
  if (n < 2 || a < 1 || a >= n) throw std::invalid_argument("CubicParams: need 1 <= a < n");
  t_ = std::gcd(2 * n, a);
}

int CubicParams::k() const noexcept {
  if (even_case()) return (n_ / t_) / 2;
  return (2 * n_ / t_ - 1) / 2;
}

int reg_cubic(const CubicParams& p) {
  const int t = p.t();
  const int k = p.k();
  if (p.even_case()) {
    const int q = p.n() / t;
    if (q % 2 == 0 || k % 2 == 1) return k * t + 1;
    return (k + 1) * t + 1;
  }
  // 2n/t odd forces t even.
  if (k % 2 == 0) return k * t / 2 + 1;
  return (k + 1) * t / 2 + 1;
}

std::string to_string(HoshinoVariant v) {
  return v == HoshinoVariant::printed ? "printed" : "corrected";
}

HoshinoVariant parse_hoshino_variant(const std::string& s) {
  if (s == "printed") return HoshinoVariant::printed;
  if (s == "corrected") return HoshinoVariant::corrected;
  throw std::invalid_argument("hoshino variant must be 'printed' or 'corrected', got '" + s + "'");
}

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

IntPolynomial hoshino_In(int n, HoshinoVariant variant) {
  if (n < 2) throw std::invalid_argument("hoshino_In: need n >= 2");
  const IntPolynomial one_plus_x{1, 1};
  IntPolynomial result{1};
  for (int l = 0; l <= (n - 2) / 4; ++l) {
    const std::int64_t numer = 2LL * n * binomial(n - 2 * l - 2, 2 * l);
    if (numer % (2 * l + 1) != 0)
      throw std::domain_error("hoshino_In: non-integer coefficient at n = " + std::to_string(n) +
                              ", l = " + std::to_string(l));
    const int e = variant == HoshinoVariant::printed ? n - 4 * l + 2 : n - 4 * l - 2;
    if (e < 0)
      throw std::invalid_argument("hoshino_In: negative exponent at n = " + std::to_string(n) +
                                  ", l = " + std::to_string(l));
    result += IntPolynomial::monomial(numer / (2 * l + 1), 2 * l + 1) * one_plus_x.pow(e);
  }
  return result;
}

IntPolynomial hoshino_cubic(CubicKind kind, int n, HoshinoVariant variant) {
  if (kind == CubicKind::prism && (n < 3 || n % 2 == 0))
    throw std::invalid_argument("hoshino_cubic: prism needs odd n >= 3");
  IntPolynomial p = hoshino_In(n, variant);
  if (kind == CubicKind::moebius && n % 2 == 1) p += IntPolynomial::monomial(2, n);
  return p;
}

FamilyBound bound_family(LadderFamily kind, int t) {
  if (t < 1) throw std::invalid_argument("bound_family: need t >= 1");
  const bool even = t % 2 == 0;
  switch (kind) {
    case LadderFamily::A:
      return {even ? (t + 4) / 2 : (t + 3) / 2, even ? 3 * t / 2 + 1 : 3 * (t - 1) / 2 + 2};
    case LadderFamily::B:
      return {even ? (t + 4) / 2 : (t + 3) / 2, std::nullopt};
    case LadderFamily::D:
      if (even || ((t - 1) / 2) % 2 == 0)
        throw std::invalid_argument("bound_family: D needs t = 2l + 1 with l odd");
      return {(t + 3) / 2, std::nullopt};
  }
  throw std::invalid_argument("bound_family: unknown family");
}

CubicBound bound_cubic(CubicKind kind, int n) {
  if (n < 4) throw std::invalid_argument("bound_cubic: need n >= 4");
  const int k = n / 2;
  if (kind == CubicKind::moebius) {
    if (n % 2 == 0) return {k + 1, 3 * k - 1};
    return {k % 2 == 1 ? k + 1 : k + 2, 3 * k + 1};
  }
  if (n % 2 == 0) throw std::invalid_argument("bound_cubic: prism needs n odd");
  return {k % 2 == 0 ? k + 1 : k + 2, 3 * k + 1};
}

}  // namespace creg
