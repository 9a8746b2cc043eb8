#include <doctest.h>

#include <stdexcept>

#include "naples/enumeration.hpp"
#include "naples/errors.hpp"
#include "naples/oracle.hpp"

using namespace naples;

namespace {

BigInt B(std::uint64_t v) { return BigInt(v); }

// Catalan numbers from the binomial closed form, as a second opinion.
BigInt catalan_closed(int n) { return binomial(2 * n, n) / (n + 1); }

std::uint64_t brute(int n, oracle::Shape shape, int k, oracle::Predicate pred) {
  return oracle::brute_count({n, shape, k, pred});
}

}  // namespace

TEST_CASE("binomials and Catalan numbers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(catalan(0) == 1);
  CHECK(catalan(4) == 14);
  CHECK(catalan(10) == 16796);
  for (int n = 0; n <= 60; ++n) REQUIRE(catalan(n) == catalan_closed(n));
}

TEST_CASE("power series arithmetic") {
  const PowerSeries c = PowerSeries::catalan_series(10);
  for (int i = 0; i <= 10; ++i) CHECK(c[i] == catalan(i));
  const PowerSeries x = PowerSeries::monomial(10, 1);
  CHECK(PowerSeries::constant(10, 1) + x * c.pow(2) == c);
  CHECK((c - c) == PowerSeries(10));
  CHECK((c * B(3))[2] == 6);
  CHECK(c.shifted(2)[2] == 1);
  CHECK(c.shifted(2)[0] == 0);
  CHECK_THROWS_AS(c.coefficient(11), DomainError);
  CHECK(PowerSeries::monomial(3, 5) == PowerSeries(3));
  // (1 - x)^{-1} = 1 + x + x^2 + ...
  const PowerSeries geometric = (PowerSeries::constant(10, 1) - x).reciprocal();
  for (int i = 0; i <= 10; ++i) CHECK(geometric[i] == 1);
  CHECK((c * c.reciprocal()) == PowerSeries::constant(10, 1));
  CHECK_THROWS_AS((c * B(2)).reciprocal(), DomainError);
  CHECK_THROWS_AS(c + PowerSeries::catalan_series(5), DomainError);
}

TEST_CASE("ascending counts match brute force, n <= 8, k <= 4") {
  CHECK(count_ascending(3, 1) == 8);
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= 4; ++k) {
      std::uint64_t all = 0;
      std::uint64_t starts_one = 0;
      oracle::enumerate({n, oracle::Shape::ascending, k, oracle::Predicate::k_naples}, [&](const Preference& p) {
        ++all;
        starts_one += !p.empty() && p[0] == 1;
      });
      CHECK(count_ascending(n, k) == all);
      if (n > 0) CHECK(count_ascending_starts_one(n, k) == starts_one);
    }
  }
}

TEST_CASE("recurrence boundary values") {
  for (int n = 0; n <= 20; ++n) CHECK(count_ascending(n, 0) == catalan(n));
  for (int k = 0; k <= 5; ++k) CHECK(count_ascending(0, k) == 1);
  CountTable table;
  CHECK(table.ascending(8, 3) == count_ascending(8, 3));
  CHECK(table.ascending_starts_one(2, 5) == count_ascending_starts_one(2, 5));
  CHECK(table.ascending(12, 1) == count_ascending(12, 1));
  CHECK_THROWS_AS(count_ascending(-1, 0), DomainError);
  CHECK_THROWS_AS(count_ascending(3, -1), DomainError);
}

TEST_CASE("Fine numbers") {
  const std::vector<int> expected{1, 0, 1, 2, 6, 18, 57, 186};
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(fine(static_cast<int>(i)) == expected[i]);
  for (int n = 1; n <= 12; ++n) {
    CHECK(fine(n + 1) == brute(n, oracle::Shape::ascending, 1, oracle::Predicate::k_naples) -
                             [&] {
                               std::uint64_t not_one = 0;
                               oracle::enumerate({n, oracle::Shape::ascending, 1, oracle::Predicate::k_naples},
                                                 [&](const Preference& p) { not_one += p[0] != 1; });
                               return not_one;
                             }());
  }
  for (int n = 1; n <= 30; ++n) CHECK(count_ascending_starts_one(n, 1) == fine(n + 1));
  for (int n = 0; n <= 30; ++n) CHECK(count_ascending(n, 1) == catalan_fine_convolution(n));
  CHECK(catalan_fine_convolution(2) == 3);
  CHECK(catalan_fine_convolution(3) == 8);
}

TEST_CASE("descending closed forms match brute force, n <= 8, k <= 4") {
  CHECK(count_descending_strict(7, 2) == 429);
  CHECK(count_descending_total(4, 1) == 28);
  CHECK(count_descending_total(3, 1) == 9);
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= 4; ++k) {
      CHECK(count_descending_strict(n, k) == brute(n, oracle::Shape::descending, k, oracle::Predicate::strictly_k_naples));
      CHECK(count_descending_total(n, k) == brute(n, oracle::Shape::descending, k, oracle::Predicate::k_naples));
    }
  }
  // Totals are cumulative strict counts.
  for (int n = 1; n <= 20; ++n) {
    BigInt sum = 0;
    for (int k = 0; k <= n; ++k) {
      sum += count_descending_strict(n, k);
      CHECK(count_descending_total(n, k) == sum);
    }
  }
  CHECK_THROWS_AS(count_descending_strict(0, 1), DomainError);
  CHECK_THROWS_AS(count_descending_total(3, -1), DomainError);
}

TEST_CASE("convolution term") {
  const PowerSeries c = PowerSeries::catalan_series(20);
  for (int m = 1; m <= 20; ++m) {
    for (int r = 1; r <= m; ++r) REQUIRE(catalan_convolution_term(m, r) == c.pow(r)[m - r]);
  }
  CHECK(catalan_convolution_term(10, 6) == c.pow(6)[4]);
  CHECK_THROWS_AS(catalan_convolution_term(3, 4), DomainError);
  CHECK_THROWS_AS(catalan_convolution_term(3, 0), DomainError);
}

TEST_CASE("identity report through order 30") {
  const IdentityReport report = verify_identities(30);
  CHECK(report.ok());
  CHECK(report.order == 30);
  CHECK(report.checks > 1000);
  CHECK(report.families == std::vector<std::string>{"functional-equations", "convolution-term", "catalan-binomial-sum",
                                                    "central-binomial", "descending-series", "strict-series"});
  CHECK(verify_identities(1).ok());
  CHECK_THROWS_AS(verify_identities(-1), DomainError);
}
