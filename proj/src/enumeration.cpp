#include "naples/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

#include "naples/errors.hpp"

namespace naples {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

BigInt exact_divide(const BigInt& a, const BigInt& b) {
  if (a % b != 0) throw std::logic_error("inexact division " + a.str() + " / " + b.str());
  return a / b;
}

}  // namespace

BigInt binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt result = 1;
  // result * (a-i) is divisible by i+1 because the running value is C(a, i).
  for (int i = 0; i < b; ++i) result = result * (a - i) / (i + 1);
  return result;
}

BigInt catalan(int n) {
  require(n >= 0, "catalan index must be nonnegative");
  std::vector<BigInt> c{1};
  for (int m = 0; m < n; ++m) {
    BigInt next = 0;
    for (int i = 0; i <= m; ++i) next += c[i] * c[m - i];
    c.push_back(next);
  }
  return c[n];
}

PowerSeries::PowerSeries(int order) : order_(order), coeffs_(order + 1, BigInt(0)) {
  require(order >= 0, "series order must be nonnegative");
}

PowerSeries::PowerSeries(int order, std::vector<BigInt> coefficients) : PowerSeries(order) {
  const std::size_t keep = std::min(coefficients.size(), coeffs_.size());
  std::move(coefficients.begin(), coefficients.begin() + keep, coeffs_.begin());
}

PowerSeries PowerSeries::constant(int order, const BigInt& c) {
  PowerSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::monomial(int order, int d) {
  require(d >= 0, "negative exponent");
  PowerSeries s(order);
  if (d <= order) s.coeffs_[d] = 1;
  return s;
}

PowerSeries PowerSeries::catalan_series(int order) {
  PowerSeries s(order);
  s.coeffs_[0] = 1;
  for (int n = 1; n <= order; ++n) {
    for (int i = 0; i < n; ++i) s.coeffs_[n] += s.coeffs_[i] * s.coeffs_[n - 1 - i];
  }
  return s;
}

BigInt PowerSeries::coefficient(int i) const {
  if (i < 0 || i > order_) throw DomainError("coefficient " + std::to_string(i) + " outside order " + std::to_string(order_));
  return coeffs_[i];
}

void PowerSeries::check_order(const PowerSeries& o) const {
  if (o.order_ != order_) throw DomainError("series orders differ");
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  check_order(o);
  PowerSeries out(*this);
  for (int i = 0; i <= order_; ++i) out.coeffs_[i] += o.coeffs_[i];
  return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  check_order(o);
  PowerSeries out(*this);
  for (int i = 0; i <= order_; ++i) out.coeffs_[i] -= o.coeffs_[i];
  return out;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  check_order(o);
  PowerSeries out(order_);
  for (int i = 0; i <= order_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order_; ++j) out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return out;
}

PowerSeries PowerSeries::operator*(const BigInt& c) const {
  PowerSeries out(*this);
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

PowerSeries PowerSeries::pow(int e) const {
  require(e >= 0, "negative power");
  PowerSeries result = constant(order_, 1);
  PowerSeries base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

PowerSeries PowerSeries::shifted(int d) const {
  require(d >= 0, "negative shift");
  PowerSeries out(order_);
  for (int i = 0; i + d <= order_; ++i) out.coeffs_[i + d] = coeffs_[i];
  return out;
}

PowerSeries PowerSeries::reciprocal() const {
  const BigInt& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1) throw DomainError("reciprocal needs a unit constant term");
  PowerSeries out(order_);
  out.coeffs_[0] = c0;  // 1/c0 == c0 for units
  for (int n = 1; n <= order_; ++n) {
    BigInt acc = 0;
    for (int i = 1; i <= n; ++i) acc += coeffs_[i] * out.coeffs_[n - i];
    out.coeffs_[n] = -acc * c0;
  }
  return out;
}

void CountTable::grow(int n, int k) {
  require(n >= 0 && k >= 0, "counts need n >= 0 and k >= 0");
  if (n <= n_max_ && k <= k_max_) return;
  n_max_ = std::max(n, n_max_);
  k_max_ = std::max(k, k_max_);
  const std::vector<BigInt> cat = PowerSeries::catalan_series(std::max(n_max_, k_max_)).coefficients();

  u_.assign(k_max_ + 1, std::vector<BigInt>(n_max_ + 1));
  i_.assign(k_max_ + 1, std::vector<BigInt>(n_max_ + 1));
  for (int m = 0; m <= n_max_; ++m) {
    u_[0][m] = m > 0 ? cat[m] : BigInt(0);
    i_[0][m] = cat[m];
  }
  for (int kk = 1; kk <= k_max_; ++kk) {
    for (int m = 0; m <= n_max_; ++m) {
      BigInt sum = 0;
      for (int i = 0; i <= m - kk; ++i) sum += u_[kk - 1][i] * u_[kk][m - kk - i];
      u_[kk][m] = u_[kk - 1][m] + cat[kk] * sum;
    }
    for (int m = 0; m <= n_max_; ++m) {
      BigInt sum = 0;
      for (int i = 0; i <= m - kk; ++i) sum += i_[kk - 1][i] * u_[kk][m - kk - i];
      i_[kk][m] = i_[kk - 1][m] + cat[kk] * sum;
    }
  }
}

const BigInt& CountTable::ascending(int n, int k) {
  grow(n, k);
  return i_[k][n];
}

const BigInt& CountTable::ascending_starts_one(int n, int k) {
  grow(n, k);
  return u_[k][n];
}

BigInt count_ascending(int n, int k) { return CountTable{}.ascending(n, k); }
BigInt count_ascending_starts_one(int n, int k) { return CountTable{}.ascending_starts_one(n, k); }

namespace {
PowerSeries fine_series(int order) {
  const PowerSeries c = PowerSeries::catalan_series(order);
  return (PowerSeries::constant(order, 1) - (c * c).shifted(2)).reciprocal();
}
}  // namespace

BigInt fine(int n) {
  require(n >= 0, "fine index must be nonnegative");
  return fine_series(n)[n];
}

BigInt catalan_fine_convolution(int n) {
  require(n >= 0, "index must be nonnegative");
  return (PowerSeries::catalan_series(n) * fine_series(n))[n];
}

BigInt count_descending_strict(int n, int k) {
  require(n >= 1 && k >= 0, "descending counts need n >= 1 and k >= 0");
  return exact_divide((k + 1) * binomial(2 * n, n + k + 1), n);
}

BigInt count_descending_total(int n, int k) {
  require(n >= 1 && k >= 0, "descending counts need n >= 1 and k >= 0");
  return binomial(2 * n - 1, n) - binomial(2 * n - 1, n + k + 1);
}

BigInt catalan_convolution_term(int m, int r) {
  require(1 <= r && r <= m, "convolution term needs 1 <= r <= m, got m = " + std::to_string(m) + ", r = " + std::to_string(r));
  return exact_divide(r * binomial(2 * m - r, m), 2 * m - r);
}

namespace {

class Checker {
 public:
  explicit Checker(IdentityReport& report) : report_(report) {}

  void family(std::string name) {
    current_ = std::move(name);
    report_.families.push_back(current_);
  }

  void equal(const BigInt& lhs, const BigInt& rhs, const std::string& where) {
    ++report_.checks;
    if (lhs != rhs) report_.failures.push_back({current_, where + ": " + lhs.str() + " != " + rhs.str()});
  }

  void equal(const PowerSeries& lhs, const PowerSeries& rhs, const std::string& where) {
    for (int n = 0; n <= lhs.order(); ++n) equal(lhs[n], rhs[n], where + " [x^" + std::to_string(n) + "]");
  }

 private:
  IdentityReport& report_;
  std::string current_;
};

std::string at(int k) { return "k=" + std::to_string(k); }

}  // namespace

IdentityReport verify_identities(int order) {
  require(order >= 1, "identity order must be at least 1");
  constexpr int k_max = 4;
  IdentityReport report;
  report.order = order;
  Checker check(report);
  const int N = order;
  const PowerSeries one = PowerSeries::constant(N, 1);
  const PowerSeries c = PowerSeries::catalan_series(N);

  check.family("functional-equations");
  CountTable table;
  auto series_of = [&](int k, bool starts_one) {
    std::vector<BigInt> coeffs;
    for (int n = 0; n <= N; ++n) coeffs.push_back(starts_one ? table.ascending_starts_one(n, k) : table.ascending(n, k));
    return PowerSeries(N, std::move(coeffs));
  };
  for (int k = 1; k <= k_max; ++k) {
    const PowerSeries ik = series_of(k, false), ik1 = series_of(k - 1, false);
    const PowerSeries uk = series_of(k, true), uk1 = series_of(k - 1, true);
    check.equal(ik, ik1 + (ik1 * uk).shifted(k) * catalan(k), "I " + at(k));
    check.equal(uk, uk1 + (uk1 * uk).shifted(k) * catalan(k), "U " + at(k));
  }

  check.family("convolution-term");
  PowerSeries c_power = one;
  for (int r = 1; r <= N; ++r) {
    c_power = c_power * c;
    for (int m = r; m - r <= N && m <= N; ++m) {
      check.equal(catalan_convolution_term(m, r), c_power[m - r], "m=" + std::to_string(m) + " r=" + std::to_string(r));
    }
  }

  check.family("catalan-binomial-sum");
  const PowerSeries wide_c = PowerSeries::catalan_series(2 * N);
  for (int p = 1; p <= 2 * N; ++p) {
    for (int q = (p + 2) / 2; q <= p; ++q) {
      BigInt sum = 0;
      for (int i = 0; i <= q - 1; ++i) sum += wide_c[i] * binomial(p - 1 - 2 * i, q - 1 - i);
      check.equal(sum, binomial(p, q), "p=" + std::to_string(p) + " q=" + std::to_string(q));
    }
  }

  const PowerSeries xc2 = (c * c).shifted(1);
  const PowerSeries g = c * c * (one - xc2).reciprocal();

  check.family("central-binomial");
  PowerSeries c_minus_one_power = one;
  for (int k = 0; k <= k_max; ++k) {
    const PowerSeries lhs = g * c_minus_one_power;
    for (int n = 0; n <= N; ++n) {
      check.equal(lhs[n], binomial(2 * n + 1, n + k + 1), at(k) + " n=" + std::to_string(n));
    }
    c_minus_one_power = c_minus_one_power * (c - one);
  }

  check.family("descending-series");
  for (int k = 0; k <= k_max; ++k) {
    PowerSeries d(N);
    for (int i = 0; i <= k; ++i) d = d + xc2.pow(i + 1);
    check.equal(d, g.shifted(1) - (g * c.pow(2 * k + 2)).shifted(k + 2), at(k));
    for (int n = 1; n <= N; ++n) check.equal(d[n], count_descending_total(n, k), at(k) + " total n=" + std::to_string(n));
  }

  check.family("strict-series");
  for (int k = 0; k <= k_max; ++k) {
    const PowerSeries s = c.pow(2 * k + 2).shifted(k + 1);
    for (int n = 1; n <= N; ++n) check.equal(s[n], count_descending_strict(n, k), at(k) + " n=" + std::to_string(n));
  }
  return report;
}

}  // namespace naples
