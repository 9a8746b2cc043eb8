#include <doctest.h>

#include <functional>
#include <set>

#include "naples/errors.hpp"
#include "naples/oracle.hpp"
#include "naples/paths.hpp"

using namespace naples;

namespace {

KDyckPath K(const char* w) { return parse_k_dyck_path(w); }
DyckPath D(const char* w) { return parse_dyck_path(w); }
Preference P(std::vector<int> v) { return Preference(std::move(v)); }

// Every balanced U/D word of length 2n ending in D whose heights stay >= -k.
void k_dyck_words(int n, int k, const std::function<void(const std::string&)>& visit) {
  std::string w;
  std::function<void(int, int)> grow = [&](int ups, int h) {
    if (static_cast<int>(w.size()) == 2 * n) {
      if (h == 0 && (w.empty() || w.back() == 'D')) visit(w);
      return;
    }
    if (ups < n) {
      w.push_back('U');
      grow(ups + 1, h + 1);
      w.pop_back();
    }
    if (h - 1 >= -k) {
      w.push_back('D');
      grow(ups, h - 1);
      w.pop_back();
    }
  };
  grow(0, 0);
}

// Straight from the definition: simulate the ascending preference's
// crossing rule with an explicit step scan.
bool recovers_within(const std::string& w, int k) {
  int h = 0;
  for (std::size_t s = 0; s < w.size(); ++s) {
    const int before = h;
    h += w[s] == 'U' ? 1 : -1;
    if (!(before == 0 && h == -1)) continue;
    int g = h;
    bool ok = false;
    for (std::size_t t = s + 1; t < w.size() && t <= s + 2 * static_cast<std::size_t>(k); ++t) {
      g += w[t] == 'U' ? 1 : -1;
      if (g >= 1) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("preference <-> path examples") {
  CHECK(ascending_pref_from_path(K("UDDUUDDUDUUD")) == P({1, 3, 3, 5, 6, 6}));
  CHECK(ascending_pref_from_path(K("UDUDDDUUDUUUDD")) == P({1, 2, 5, 5, 6, 6, 6}));
  CHECK(ascending_pref_from_path(K("UUDD")) == P({1, 1}));
  CHECK(path_from_ascending_pref(P({1, 3, 3, 5, 6, 6})).str() == "UDDUUDDUDUUD");
  CHECK(path_from_ascending_pref(P({1, 3, 3, 5, 6, 6})).bound() == 1);
  CHECK(path_from_ascending_pref(P({1, 1, 2})).str() == "UUDUDD");
  CHECK(path_from_ascending_pref(P({1, 1, 2})).bound() == 0);
  CHECK(path_from_ascending_pref(P({1})).str() == "UD");
  CHECK(descending_pref_from_path(K("UDUDDDUUDUUUDD")) == P({6, 6, 6, 5, 5, 2, 1}));
  CHECK(descending_pref_from_path(K("UUDD")) == P({1, 1}));
  CHECK(descending_pref_from_path(K("UDUD")) == P({2, 1}));
  CHECK(path_from_descending_pref(P({6, 6, 6, 5, 5, 2, 1})).str() == "UDUDDDUUDUUUDD");
  CHECK_THROWS_AS(path_from_ascending_pref(P({2, 1})), DomainError);
  CHECK_THROWS_AS(path_from_descending_pref(P({1, 2})), DomainError);
}

TEST_CASE("ascending criterion examples") {
  CHECK(ascending_is_k_naples_path(K("UDDUUDDUDUUD"), 2));
  CHECK_FALSE(ascending_is_k_naples_path(K("UDDUUDDUDUUD"), 1));
  CHECK_FALSE(ascending_is_k_naples_path(K("UDDUDDUUDUUD"), 2));
  for (int k = 0; k <= 3; ++k) CHECK(ascending_is_k_naples_path(K("UUDUDDUD"), k));
}

TEST_CASE("round trips over ascending preferences, n <= 10") {
  for (int n = 0; n <= 10; ++n) {
    oracle::enumerate({n, oracle::Shape::ascending, 0, oracle::Predicate::none}, [&](const Preference& p) {
      const KDyckPath path = path_from_ascending_pref(p);
      REQUIRE(path.length() == static_cast<std::size_t>(n));
      REQUIRE(ascending_pref_from_path(path) == p);
      REQUIRE(path_from_ascending_pref(ascending_pref_from_path(path)) == path);
    });
  }
}

TEST_CASE("k-Dyck paths and descending k-Naples preferences are equinumerous, n <= 8, k <= 3") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= 3; ++k) {
      std::set<Preference> images;
      k_dyck_words(n, k, [&](const std::string& w) {
        const KDyckPath path = K(w.c_str());
        REQUIRE(path.fits(k));
        images.insert(descending_pref_from_path(path));
      });
      const auto brute = oracle::brute_count({n, oracle::Shape::descending, k, oracle::Predicate::k_naples});
      CHECK(images.size() == brute);
      for (const auto& p : images) REQUIRE(is_k_naples(p, k));
    }
  }
}

TEST_CASE("ascending criterion matches the definition-level scan and the simulator, n <= 8, k <= 3") {
  for (int n = 0; n <= 8; ++n) {
    oracle::enumerate({n, oracle::Shape::ascending, 0, oracle::Predicate::none}, [&](const Preference& p) {
      const KDyckPath path = path_from_ascending_pref(p);
      for (int k = 0; k <= 3; ++k) {
        REQUIRE(ascending_is_k_naples_path(path, k) == recovers_within(path.str(), k));
        REQUIRE(ascending_is_k_naples_path(path, k) == is_k_naples(p, k));
      }
    });
  }
}

TEST_CASE("embedding") {
  CHECK(embed(K("UDUDDDUUDUUUDD"), 2).str() == "UUUDUDDDUUDUUUDDDD");
  CHECK(embed(K(""), 1).str() == "UD");
  CHECK(embed(K(""), 3).str() == "UUUDDD");
  CHECK(embed(K("UD"), 1).str() == "UUDD");
  CHECK(unembed(D("UUUDUDDDUUDUUUDDDD"), 2).str() == "UDUDDDUUDUUUDD");
  CHECK(unembed(D("UUUDDD"), 3).str().empty());
  CHECK_THROWS_AS(unembed(D("UUDUDD"), 2), DomainError);
  CHECK_THROWS_AS(unembed(D("UDUD"), 1), DomainError);
  CHECK_THROWS_AS(embed(K("DDUUUD"), 1), DomainError);
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= 3; ++k) {
      k_dyck_words(n, k, [&](const std::string& w) {
        const KDyckPath path = K(w.c_str());
        const std::string e = embed(path, k).str();
        REQUIRE(e.starts_with(std::string(k, 'U')));
        REQUIRE(e.ends_with(std::string(n == 0 ? k : k + 1, 'D')));
        REQUIRE(unembed(embed(path, k), k) == path);
      });
    }
  }
}

TEST_CASE("strictness") {
  CHECK(is_strictly_k(K("UDUDDDUUDUUUDD"), 2));
  CHECK_THROWS_AS(is_strictly_k(K("UDUDDDUUDUUUDD"), 1), DomainError);
  CHECK_FALSE(is_strictly_k(K("UDUDDDUUDUUUDD"), 3));
  for (int k = 1; k <= 3; ++k) CHECK_FALSE(is_strictly_k(K("UUDD"), k));
  for (int n = 1; n <= 8; ++n) {
    oracle::enumerate({n, oracle::Shape::descending, 0, oracle::Predicate::none}, [&](const Preference& p) {
      const KDyckPath path = path_from_descending_pref(p);
      for (int k = 0; k <= 3; ++k) {
        if (!path.fits(k)) continue;
        REQUIRE(is_strictly_k(path, k) == (minimal_k(p) == k));
      }
    });
  }
}

TEST_CASE("embedded ascending criterion agrees with the unembedded one") {
  for (int n = 0; n <= 8; ++n) {
    oracle::enumerate({n, oracle::Shape::ascending, 0, oracle::Predicate::none}, [&](const Preference& p) {
      const KDyckPath path = path_from_ascending_pref(p);
      for (int k = 0; k <= 3; ++k) {
        if (!path.fits(k)) continue;
        REQUIRE(embedded_ascending_criterion(embed(path, k), k) == ascending_is_k_naples_path(path, k));
      }
    });
  }
}

TEST_CASE("reflection after the first return") {
  const DyckPath running = embed(K("UDUDDDUUDUUUDD"), 2);
  CHECK(first_interior_return(running) == 8);
  CHECK(reflect_after_first_return(running, 2).str() == "UUUDUDDDUUUUDDDUDD");
  CHECK(reflect_after_first_return(D("UUDDUUDD"), 1).str() == "UUDDUUDD");
  CHECK_THROWS_AS(reflect_after_first_return(D("UUDD"), 1), DomainError);
  CHECK_THROWS_AS(reflect_after_first_return(D("UDUUDD"), 2), DomainError);
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= 3; ++k) {
      k_dyck_words(n, k, [&](const std::string& w) {
        const KDyckPath path = K(w.c_str());
        if (path.bound() != k) return;
        const DyckPath e = embed(path, k);
        const DyckPath r = reflect_after_first_return(e, k);
        REQUIRE(reflect_after_first_return(r, k) == e);
        // After the first return the reflected path climbs at least k+1 steps.
        const std::size_t ret = first_interior_return(r);
        REQUIRE(r.str().substr(ret, k + 1) == std::string(k + 1, 'U'));
      });
    }
  }
}

TEST_CASE("words and parsing") {
  CHECK(parse_step_word("UD DU").str() == "UDDU");
  CHECK(StepWord("UUD").heights() == std::vector<int>{0, 1, 2, 1});
  CHECK(K("DUUD").bound() == 1);
  CHECK(K("DUUD").fits(1));
  CHECK_FALSE(K("DUUD").fits(0));
  CHECK_THROWS_AS(parse_step_word("UXD"), ParseError);
  CHECK_THROWS_AS(parse_dyck_path("DU"), ParseError);
  CHECK_THROWS_AS(parse_k_dyck_path("UDU"), ParseError);
  CHECK_THROWS_AS(parse_k_dyck_path("DU"), ParseError);
  CHECK_THROWS_AS(ascending_is_k_naples_path(K("UD"), -1), DomainError);
}
