#include <doctest.h>

#include "naples/errors.hpp"
#include "naples/theorems.hpp"

using namespace naples;

TEST_CASE("registry") {
  std::vector<std::string> ids;
  for (const auto& t : registered_theorems()) {
    ids.push_back(t.id);
    CHECK_FALSE(t.summary.empty());
    CHECK(t.default_n >= 1);
    CHECK(t.default_k >= 0);
  }
  CHECK(ids == std::vector<std::string>{"rearrangement", "filled-prefix", "ascending-path", "embedding", "strict-path",
                                        "embedded-ascending", "height-lemmas", "ascending-tree", "strict-tree",
                                        "recurrences", "fine", "descending-counts", "identities", "dissection",
                                        "noncrossing-partition"});
}

TEST_CASE("every check passes at small sizes") {
  for (const auto& t : registered_theorems()) {
    CAPTURE(t.id);
    const TheoremReport r = check_theorem(t.id, std::min(t.default_n, 5), std::min(t.default_k, 2));
    CHECK(r.id == t.id);
    CHECK(r.ok());
    CHECK(r.cases > 0);
    CHECK(r.counterexamples.empty());
  }
}

TEST_CASE("defaults are reported") {
  const TheoremReport r = check_theorem("strict-tree");
  CHECK(r.ok());
  CHECK(r.n_max == 8);
  CHECK(r.k_max == 3);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(check_theorem("no-such-check"), DomainError);
  CHECK_THROWS_AS(check_theorem("rearrangement", 99, 1), DomainError);
  CHECK_THROWS_AS(check_theorem("fine", -1, 1), DomainError);
}
