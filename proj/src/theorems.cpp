#include "naples/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "naples/catalan_objects.hpp"
#include "naples/enumeration.hpp"
#include "naples/errors.hpp"
#include "naples/oracle.hpp"
#include "naples/paths.hpp"
#include "naples/trees.hpp"

namespace naples {

namespace {

constexpr std::size_t kKeptCounterexamples = 100;

class Recorder {
 public:
  explicit Recorder(TheoremReport& report) : report_(report) {}

  void expect(bool holds, const std::function<std::string()>& describe) {
    ++report_.cases;
    if (holds) return;
    ++report_.failures;
    if (report_.counterexamples.size() < kKeptCounterexamples) report_.counterexamples.push_back(describe());
  }

  void tally(std::uint64_t cases, const std::vector<std::string>& failures) {
    report_.cases += cases;
    report_.failures += failures.size();
    for (const auto& f : failures) {
      if (report_.counterexamples.size() < kKeptCounterexamples) report_.counterexamples.push_back(f);
    }
  }

 private:
  TheoremReport& report_;
};

using oracle::Shape;

void each_pref(int n, Shape shape, const std::function<void(const Preference&)>& visit) {
  oracle::enumerate({n, shape, 0, oracle::Predicate::none}, visit);
}

std::string with_k(const Preference& p, int k) { return "(" + to_string(p) + ") k=" + std::to_string(k); }

std::string big(std::uint64_t v) { return std::to_string(v); }

void rearrangement(Recorder& rec, int n_max, int k_max) {
  for (int n = 1; n <= n_max; ++n) {
    std::map<Preference, std::vector<bool>> brute;
    each_pref(n, Shape::all, [&](const Preference& p) {
      const Preference key = p.sorted_ascending();
      auto it = brute.find(key);
      if (it == brute.end()) {
        std::vector<bool> verdicts;
        for (int k = 0; k <= k_max; ++k) verdicts.push_back(oracle::all_rearrangements_park(key, k));
        it = brute.emplace(key, std::move(verdicts)).first;
      }
      for (int k = 0; k <= k_max; ++k) {
        rec.expect(rearrangements_all_k_naples(p, k) == it->second[k], [&] { return with_k(p, k); });
      }
    });
  }
}

void filled_prefix(Recorder& rec, int n_max, int k_max) {
  for (int n = 1; n <= n_max; ++n) {
    each_pref(n, Shape::all, [&](const Preference& p) {
      for (int k = 0; k <= k_max; ++k) {
        const ParkingOutcome run = park(p, k);
        if (!run.ok()) continue;
        const auto& d = run.assignment;
        for (int i = 1; i <= n; ++i) {
          const std::vector<int> remaining(p.entries().begin() + i, p.entries().end());
          std::vector<int> prefix(d.begin(), d.begin() + i);
          const std::set<int> taken(prefix.begin(), prefix.end());
          for (int l = 0; l < i; ++l) {
            const int original = prefix[l];
            for (int spot = 1; spot < original; ++spot) {
              if (taken.contains(spot)) continue;
              prefix[l] = spot;
              const bool parks = park_filled(FilledPreference(prefix, remaining), k).ok();
              rec.expect(parks, [&] {
                return with_k(p, k) + " i=" + std::to_string(i) + " car " + std::to_string(l + 1) + " moved to " +
                       std::to_string(spot);
              });
            }
            prefix[l] = original;
          }
        }
      }
    });
  }
}

void ascending_path(Recorder& rec, int n_max, int k_max) {
  for (int n = 0; n <= n_max; ++n) {
    each_pref(n, Shape::ascending, [&](const Preference& p) {
      const KDyckPath path = path_from_ascending_pref(p);
      rec.expect(ascending_pref_from_path(path) == p, [&] { return "round trip (" + to_string(p) + ")"; });
      for (int k = 0; k <= k_max; ++k) {
        rec.expect(ascending_is_k_naples_path(path, k) == park(p, k).ok(), [&] { return with_k(p, k); });
      }
    });
  }
}

bool has_margins(const std::string& w, int k, int n) {
  const std::string head(k, 'U');
  const std::string tail(n == 0 ? k : k + 1, 'D');
  return w.starts_with(head) && w.ends_with(tail);
}

void embedding(Recorder& rec, int n_max, int k_max) {
  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::uint64_t> fitting(k_max + 1, 0);
    each_pref(n, Shape::descending, [&](const Preference& p) {
      const KDyckPath path = path_from_descending_pref(p);
      rec.expect(descending_pref_from_path(path) == p, [&] { return "round trip (" + to_string(p) + ")"; });
      for (int k = 0; k <= k_max; ++k) {
        rec.expect(path.fits(k) == park(p, k).ok(), [&] { return "path bound " + with_k(p, k); });
        if (!path.fits(k)) continue;
        ++fitting[k];
        const DyckPath e = embed(path, k);
        rec.expect(has_margins(e.str(), k, n) && unembed(e, k) == path, [&] { return "embed " + with_k(p, k); });
      }
    });
    for (int k = 0; k <= k_max; ++k) {
      std::uint64_t margins = 0;
      for (const auto& t : all_binary_trees(n + k)) margins += has_margins(dyck_from_tree(t).str(), k, n);
      rec.expect(margins == fitting[k], [&] {
        return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + big(margins) + " Dyck paths vs " +
               big(fitting[k]) + " k-Dyck paths";
      });
    }
  }
}

void strict_path(Recorder& rec, int n_max, int k_max) {
  for (int n = 1; n <= n_max; ++n) {
    each_pref(n, Shape::descending, [&](const Preference& p) {
      const KDyckPath path = path_from_descending_pref(p);
      for (int k = 0; k <= k_max; ++k) {
        if (!park(p, k).ok()) continue;
        const bool strict = oracle::satisfies(p, k, oracle::Predicate::strictly_k_naples);
        rec.expect(is_strictly_k(path, k) == strict, [&] { return "bound " + with_k(p, k); });
        rec.expect((minimal_k(p) == k) == strict, [&] { return "minimal_k " + with_k(p, k); });
        if (k >= 1) {
          const bool returns = first_interior_return(embed(path, k)) != 0;
          rec.expect(returns == strict, [&] { return "embedded return " + with_k(p, k); });
        }
      }
    });
  }
}

void embedded_ascending(Recorder& rec, int n_max, int k_max) {
  for (int n = 0; n <= n_max; ++n) {
    each_pref(n, Shape::ascending, [&](const Preference& p) {
      const KDyckPath path = path_from_ascending_pref(p);
      for (int k = 0; k <= k_max; ++k) {
        const bool parks = park(p, k).ok();
        if (!path.fits(k)) {
          rec.expect(!parks, [&] { return "deep path parks " + with_k(p, k); });
          continue;
        }
        rec.expect(embedded_ascending_criterion(embed(path, k), k) == parks, [&] { return with_k(p, k); });
      }
    });
  }
}

void height_lemmas(Recorder& rec, int n_max, int /*k_max*/) {
  for (int m = 1; m <= n_max; ++m) {
    for (const auto& t : all_binary_trees(m)) rec.expect(check_traversal_heights(t), [&] { return to_string(t); });
  }
}

void ascending_tree(Recorder& rec, int n_max, int k_max) {
  for (int n = 0; n <= n_max; ++n) {
    each_pref(n, Shape::ascending, [&](const Preference& p) {
      const KDyckPath path = path_from_ascending_pref(p);
      for (int k = 0; k <= k_max; ++k) {
        if (!path.fits(k)) continue;
        const BinaryTree tree = tree_from_dyck(embed(path, k));
        rec.expect(ascending_tree_criterion(tree, k) == park(p, k).ok(), [&] { return with_k(p, k); });
      }
    });
  }
}

void strict_tree(Recorder& rec, int n_max, int k_max) {
  for (int k = 1; k <= k_max; ++k) {
    for (int n = 1; n <= n_max; ++n) {
      std::uint64_t strict = 0;
      oracle::enumerate({n, Shape::descending, k, oracle::Predicate::strictly_k_naples}, [&](const Preference& p) {
        ++strict;
        const BinaryTree t = strict_tree_from_descending(p, k);
        rec.expect(is_strict_descending_tree(t, n, k) && descending_from_strict_tree(t, k) == p,
                   [&] { return with_k(p, k); });
        auto slots = strict_tree_slots(t, k);
        std::size_t filled = 0;
        for (const auto& s : slots) filled += s.size();
        rec.expect(slots.size() == static_cast<std::size_t>(2 * k + 2) && filled + k + 1 == static_cast<std::size_t>(n) &&
                       strict_tree_from_slots(slots, k) == t,
                   [&] { return "slots " + with_k(p, k); });
      });
      std::uint64_t shaped = 0;
      for (const auto& t : all_binary_trees(n + k)) shaped += is_strict_descending_tree(t, n, k);
      rec.expect(shaped == strict, [&] {
        return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + big(shaped) + " trees vs " + big(strict);
      });
    }
  }
}

void recurrences(Recorder& rec, int n_max, int k_max) {
  CountTable table;
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= k_max; ++k) {
      std::uint64_t all = 0;
      std::uint64_t starts_one = 0;
      oracle::enumerate({n, Shape::ascending, k, oracle::Predicate::k_naples}, [&](const Preference& p) {
        ++all;
        starts_one += !p.empty() && p[0] == 1;
      });
      const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      rec.expect(table.ascending(n, k) == all, [&] { return "I " + at; });
      rec.expect(table.ascending_starts_one(n, k) == starts_one, [&] { return "U " + at; });
    }
  }
  for (int n = 0; n <= 20; ++n) {
    rec.expect(table.ascending(n, 0) == catalan(n), [&] { return "I(" + std::to_string(n) + ",0) vs Catalan"; });
  }
}

void fine_numbers(Recorder& rec, int n_max, int /*k_max*/) {
  CountTable table;
  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t all = 0;
    std::uint64_t starts_one = 0;
    oracle::enumerate({n, Shape::ascending, 1, oracle::Predicate::k_naples}, [&](const Preference& p) {
      ++all;
      starts_one += !p.empty() && p[0] == 1;
    });
    rec.expect(fine(n + 1) == starts_one, [&] { return "U(" + std::to_string(n) + ",1) brute vs Fine"; });
    rec.expect(catalan_fine_convolution(n) == all, [&] { return "I(" + std::to_string(n) + ",1) brute vs C*F"; });
  }
  for (int n = 0; n <= 30; ++n) {
    rec.expect(table.ascending_starts_one(n, 1) == fine(n + 1), [&] { return "U(" + std::to_string(n) + ",1) vs Fine"; });
    rec.expect(table.ascending(n, 1) == catalan_fine_convolution(n), [&] { return "I(" + std::to_string(n) + ",1) vs C*F"; });
  }
}

void descending_counts(Recorder& rec, int n_max, int k_max) {
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= k_max; ++k) {
      const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      const auto strict = oracle::brute_count({n, Shape::descending, k, oracle::Predicate::strictly_k_naples});
      const auto total = oracle::brute_count({n, Shape::descending, k, oracle::Predicate::k_naples});
      rec.expect(count_descending_strict(n, k) == strict, [&] { return "strict " + at; });
      rec.expect(count_descending_total(n, k) == total, [&] { return "total " + at; });
    }
  }
}

void identities(Recorder& rec, int n_max, int /*k_max*/) {
  const IdentityReport report = verify_identities(n_max);
  std::vector<std::string> failures;
  for (const auto& f : report.failures) failures.push_back(f.family + ": " + f.detail);
  rec.tally(report.checks, failures);
}

template <typename Object>
void strict_objects(Recorder& rec, int n_max, int k_max, const std::function<Object(const BinaryTree&, int, int)>& to,
                    const std::function<BinaryTree(const Object&, int, int)>& from,
                    const std::function<std::string(const Object&)>& text) {
  for (int k = 1; k <= k_max; ++k) {
    for (int n = k + 1; n <= n_max; ++n) {
      std::set<std::string> images;
      oracle::enumerate({n, Shape::descending, k, oracle::Predicate::strictly_k_naples}, [&](const Preference& p) {
        const BinaryTree t = strict_tree_from_descending(p, k);
        const Object object = to(t, n, k);
        images.insert(text(object));
        rec.expect(from(object, n, k) == t, [&] { return with_k(p, k) + " -> " + text(object); });
      });
      rec.expect(count_descending_strict(n, k) == images.size(), [&] {
        return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + big(images.size()) + " distinct images";
      });
    }
  }
}

void dissection(Recorder& rec, int n_max, int k_max) {
  strict_objects<Dissection>(
      rec, n_max, k_max, dissection_from_strict,
      [](const Dissection& d, int n, int k) {
        validate(d);
        return strict_from_dissection(d, n, k);
      },
      [](const Dissection& d) { return to_string(d); });
}

void noncrossing_partition(Recorder& rec, int n_max, int k_max) {
  strict_objects<RootedNcp>(
      rec, n_max, k_max, ncp_from_strict,
      [](const RootedNcp& p, int n, int k) {
        validate(p);
        return strict_from_ncp(p, n, k);
      },
      [](const RootedNcp& p) { return to_string(p); });
}

struct Entry {
  TheoremInfo info;
  void (*run)(Recorder&, int, int);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"rearrangement", "ascending-rearrangement test equals the sweep over all rearrangements", 6, 3}, rearrangement},
      {{"filled-prefix", "moving a parked car to a free earlier spot keeps the rest parkable", 7, 6}, filled_prefix},
      {{"ascending-path", "2k-step recovery criterion on the path decides ascending k-Naples", 8, 3}, ascending_path},
      {{"embedding", "descending k-Naples <-> k-Dyck paths <-> Dyck paths with U^k / D^(k+1) margins", 8, 3}, embedding},
      {{"strict-path", "strictness <-> path reaches -k <-> embedded path returns early", 8, 3}, strict_path},
      {{"embedded-ascending", "ascending criterion read on the embedded Dyck path", 8, 3}, embedded_ascending},
      {{"height-lemmas", "traversal visits and path heights agree on every tree", 8, 0}, height_lemmas},
      {{"ascending-tree", "ascending criterion read on diagonal depths of the tree", 8, 3}, ascending_tree},
      {{"strict-tree", "strict descending preferences <-> trees with the strict spine", 8, 3}, strict_tree},
      {{"recurrences", "I(n,k) and U(n,k) recurrences equal brute-force counts", 8, 4}, recurrences},
      {{"fine", "U(n,1) is a Fine number and I(n,1) the Catalan-Fine convolution", 12, 1}, fine_numbers},
      {{"descending-counts", "closed forms for strict and total descending counts", 8, 4}, descending_counts},
      {{"identities", "generating-function identities, coefficientwise", 30, 4}, identities},
      {{"dissection", "strict descending preferences <-> (2k+2)-in-(n+k+1) dissections", 7, 2}, dissection},
      {{"noncrossing-partition", "strict descending preferences <-> (2k+2)-rooted NCPs of [n+k+1]", 7, 2},
       noncrossing_partition},
  };
  return entries;
}

const Entry& lookup(std::string_view id) {
  for (const auto& e : registry()) {
    if (e.info.id == id) return e;
  }
  throw DomainError("unknown theorem id '" + std::string(id) + "'");
}

}  // namespace

const std::vector<TheoremInfo>& registered_theorems() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

TheoremReport check_theorem(std::string_view id, int n_max, int k_max) {
  const Entry& entry = lookup(id);
  if (n_max < 0 || k_max < 0) throw DomainError("sizes must be nonnegative");
  TheoremReport report;
  report.id = entry.info.id;
  report.n_max = n_max;
  report.k_max = k_max;
  Recorder rec(report);
  entry.run(rec, n_max, k_max);
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  return report;
}

TheoremReport check_theorem(std::string_view id) {
  const Entry& entry = lookup(id);
  return check_theorem(id, entry.info.default_n, entry.info.default_k);
}

std::vector<TheoremReport> check_all() {
  std::vector<TheoremReport> out;
  for (const auto& e : registry()) out.push_back(check_theorem(e.info.id));
  return out;
}

}  // namespace naples
