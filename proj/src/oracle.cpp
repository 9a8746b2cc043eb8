#include "naples/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>

#include "naples/errors.hpp"

namespace naples::oracle {

namespace {

// Calls visit on every sequence of length n over [1, n] that satisfies the
// shape, lexicographically.
void walk(std::vector<int>& prefix, int n, Shape shape, const std::function<void(const Preference&)>& visit) {
  if (static_cast<int>(prefix.size()) == n) {
    visit(Preference(prefix));
    return;
  }
  int lo = 1;
  int hi = n;
  if (!prefix.empty() && shape == Shape::ascending) lo = prefix.back();
  if (!prefix.empty() && shape == Shape::descending) hi = prefix.back();
  for (int a = lo; a <= hi; ++a) {
    prefix.push_back(a);
    walk(prefix, n, shape, visit);
    prefix.pop_back();
  }
}

}  // namespace

int max_n(Shape shape) {
  if (const char* env = std::getenv("NAPLES_MAX_N")) {
    int value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value >= 0) return value;
    throw DomainError("NAPLES_MAX_N must be a nonnegative integer, got '" + std::string(text) + "'");
  }
  return shape == Shape::all ? 7 : 12;
}

void validate(const EnumerationSpec& spec) {
  if (spec.n < 0) throw DomainError("length must be nonnegative");
  if (spec.k < 0) throw DomainError("k must be nonnegative");
  const int cap = max_n(spec.shape);
  if (spec.n > cap) {
    throw DomainError("n = " + std::to_string(spec.n) + " exceeds the oracle cap " + std::to_string(cap) +
                      " (raise it with NAPLES_MAX_N)");
  }
}

bool satisfies(const Preference& pref, int k, Predicate predicate) {
  switch (predicate) {
    case Predicate::none:
      return true;
    case Predicate::k_naples:
      return park(pref, k).ok();
    case Predicate::strictly_k_naples:
      return park(pref, k).ok() && (k == 0 || !park(pref, k - 1).ok());
    case Predicate::rearrangement_closed:
      return all_rearrangements_park(pref, k);
  }
  return false;
}

void enumerate(const EnumerationSpec& spec, const std::function<void(const Preference&)>& visit) {
  validate(spec);
  std::vector<int> prefix;
  prefix.reserve(spec.n);
  walk(prefix, spec.n, spec.shape, [&](const Preference& p) {
    if (satisfies(p, spec.k, spec.predicate)) visit(p);
  });
}

std::vector<Preference> enumerate(const EnumerationSpec& spec) {
  std::vector<Preference> out;
  enumerate(spec, [&](const Preference& p) { out.push_back(p); });
  return out;
}

std::uint64_t brute_count(const EnumerationSpec& spec) {
  std::uint64_t count = 0;
  enumerate(spec, [&](const Preference&) { ++count; });
  return count;
}

void distinct_rearrangements(const Preference& pref, const std::function<void(const Preference&)>& visit) {
  std::vector<int> entries(pref.entries().begin(), pref.entries().end());
  std::sort(entries.begin(), entries.end());
  do {
    visit(Preference(entries));
  } while (std::next_permutation(entries.begin(), entries.end()));
}

bool all_rearrangements_park(const Preference& pref, int k) {
  std::vector<int> entries(pref.entries().begin(), pref.entries().end());
  std::sort(entries.begin(), entries.end());
  do {
    if (!park(Preference(entries), k).ok()) return false;
  } while (std::next_permutation(entries.begin(), entries.end()));
  return true;
}

Shape parse_shape(std::string_view text) {
  if (text == "all") return Shape::all;
  if (text == "ascending") return Shape::ascending;
  if (text == "descending") return Shape::descending;
  throw ParseError("unknown shape '" + std::string(text) + "'");
}

Predicate parse_predicate(std::string_view text) {
  if (text == "none") return Predicate::none;
  if (text == "k-naples") return Predicate::k_naples;
  if (text == "strict") return Predicate::strictly_k_naples;
  if (text == "rearrangement-closed") return Predicate::rearrangement_closed;
  throw ParseError("unknown predicate '" + std::string(text) + "'");
}

}  // namespace naples::oracle
