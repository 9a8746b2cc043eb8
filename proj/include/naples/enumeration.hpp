#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace naples {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient; 0 when b < 0 or b > a.
BigInt binomial(int a, int b);
/// Catalan numbers from C_{n+1} = sum C_i C_{n-i}; no division involved.
BigInt catalan(int n);

/// Formal power series truncated after x^order. All arithmetic is exact
/// through that order; operands must share the same order.
class PowerSeries {
 public:
  explicit PowerSeries(int order);
  PowerSeries(int order, std::vector<BigInt> coefficients);

  static PowerSeries constant(int order, const BigInt& c);
  /// x^d as a series (zero when d > order).
  static PowerSeries monomial(int order, int d);
  /// C(x) = 1 + x C(x)^2.
  static PowerSeries catalan_series(int order);

  int order() const { return order_; }
  const BigInt& operator[](int i) const { return coeffs_[i]; }
  BigInt coefficient(int i) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries operator*(const BigInt& c) const;
  PowerSeries pow(int e) const;
  /// Multiplies by x^d.
  PowerSeries shifted(int d) const;
  /// 1 / f for a constant term of +1 or -1; throws DomainError otherwise.
  PowerSeries reciprocal() const;

  bool operator==(const PowerSeries&) const = default;

 private:
  void check_order(const PowerSeries& o) const;

  int order_;
  std::vector<BigInt> coeffs_;
};

/// Memoized I(n,k) (ascending k-Naples preferences of length n) and U(n,k)
/// (those starting with 1). Tables grow on demand; U is always filled
/// before I because the I recurrence reads U.
class CountTable {
 public:
  const BigInt& ascending(int n, int k);
  const BigInt& ascending_starts_one(int n, int k);

 private:
  void grow(int n, int k);

  int n_max_ = -1;
  int k_max_ = -1;
  std::vector<std::vector<BigInt>> i_;  // i_[k][n]
  std::vector<std::vector<BigInt>> u_;
};

BigInt count_ascending(int n, int k);
BigInt count_ascending_starts_one(int n, int k);

/// Coefficients of 1 / (1 - x^2 C(x)^2): 1, 0, 1, 2, 6, 18, ...
BigInt fine(int n);
/// [x^n] C(x) F(x).
BigInt catalan_fine_convolution(int n);

/// (k+1)/n * C(2n, n+k+1); requires n >= 1, k >= 0.
BigInt count_descending_strict(int n, int k);
/// C(2n-1, n) - C(2n-1, n+k+1); requires n >= 1, k >= 0.
BigInt count_descending_total(int n, int k);

/// [x^(m-r)] C(x)^r = r/(2m-r) * C(2m-r, m), for 1 <= r <= m.
BigInt catalan_convolution_term(int m, int r);

struct IdentityFailure {
  std::string family;
  std::string detail;
};

struct IdentityReport {
  int order = 0;
  std::vector<std::string> families;
  std::size_t checks = 0;
  std::vector<IdentityFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Coefficientwise checks through x^order:
///  functional-equations  I_k = I_{k-1} + C_k x^k I_{k-1} U_k and the same for U, k <= 4
///  convolution-term      closed form vs [x^(m-r)] C^r
///  catalan-binomial-sum  sum_i C_i binom(p-1-2i, q-1-i) = binom(p, q), 1 <= q <= p <= 2q-1, p <= 2*order
///  central-binomial      [x^n] G (C-1)^k = binom(2n+1, n+k+1), G = C^2 / (1 - x C^2)
///  descending-series     sum_{i<=k} (x C^2)^(i+1) = x G - x^(k+2) G C^(2k+2), matching the closed counts
///  strict-series         [x^n] x^(k+1) C^(2k+2) = count_descending_strict(n, k)
IdentityReport verify_identities(int order);

}  // namespace naples
