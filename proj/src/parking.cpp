#include "naples/parking.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "naples/errors.hpp"

namespace naples {

namespace {

void check_k(int k) {
  if (k < 0) throw DomainError("backup bound k must be nonnegative, got " + std::to_string(k));
}

// Parks the cars with the given preferences into `occupied` (index = spot,
// index 0 unused). Appends taken spots to `taken`; returns the offset of the
// first car that fails, if any.
std::optional<std::size_t> run_cars(std::vector<char>& occupied, std::span<const int> prefs, int k,
                                    std::vector<int>& taken) {
  const int n = static_cast<int>(occupied.size()) - 1;
  for (std::size_t c = 0; c < prefs.size(); ++c) {
    const int a = prefs[c];
    int spot = 0;
    if (!occupied[a]) {
      spot = a;
    } else {
      for (int s = a - 1; s >= std::max(1, a - k); --s) {
        if (!occupied[s]) {
          spot = s;
          break;
        }
      }
      if (spot == 0) {
        for (int s = a + 1; s <= n; ++s) {
          if (!occupied[s]) {
            spot = s;
            break;
          }
        }
      }
    }
    if (spot == 0) return c;
    occupied[spot] = 1;
    taken.push_back(spot);
  }
  return std::nullopt;
}

}  // namespace

Preference::Preference(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = static_cast<int>(entries_.size());
  for (int a : entries_) {
    if (a < 1 || a > n) {
      throw DomainError("preference entry " + std::to_string(a) + " outside [1, " + std::to_string(n) + "]");
    }
  }
}

bool Preference::is_ascending() const { return std::is_sorted(entries_.begin(), entries_.end()); }

bool Preference::is_descending() const {
  return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

Preference Preference::sorted_ascending() const {
  Preference out = *this;
  std::sort(out.entries_.begin(), out.entries_.end());
  return out;
}

Preference Preference::sorted_descending() const {
  Preference out = *this;
  std::sort(out.entries_.begin(), out.entries_.end(), std::greater<>());
  return out;
}

FilledPreference::FilledPreference(std::vector<int> parked, std::vector<int> remaining)
    : parked_(std::move(parked)), remaining_(std::move(remaining)) {
  const int n = static_cast<int>(size());
  std::vector<char> seen(n + 1, 0);
  for (int p : parked_) {
    if (p < 1 || p > n) throw DomainError("parked spot " + std::to_string(p) + " outside the lot");
    if (seen[p]) throw DomainError("spot " + std::to_string(p) + " is parked twice");
    seen[p] = 1;
  }
  for (int a : remaining_) {
    if (a < 1 || a > n) throw DomainError("preference entry " + std::to_string(a) + " outside the lot");
  }
}

ParkingOutcome park(const Preference& pref, int k) {
  check_k(k);
  std::vector<char> occupied(pref.size() + 1, 0);
  std::vector<int> taken;
  taken.reserve(pref.size());
  if (auto failed = run_cars(occupied, pref.entries(), k, taken)) {
    return ParkingOutcome::failure(static_cast<int>(*failed) + 1);
  }
  return ParkingOutcome::success(std::move(taken));
}

ParkingOutcome park_filled(const FilledPreference& fp, int k) {
  check_k(k);
  std::vector<char> occupied(fp.size() + 1, 0);
  std::vector<int> taken(fp.parked().begin(), fp.parked().end());
  for (int p : fp.parked()) occupied[p] = 1;
  if (auto failed = run_cars(occupied, fp.remaining(), k, taken)) {
    return ParkingOutcome::failure(static_cast<int>(fp.parked().size() + *failed) + 1);
  }
  return ParkingOutcome::success(std::move(taken));
}

bool is_k_naples(const Preference& pref, int k) { return park(pref, k).ok(); }

bool is_strictly_k_naples(const Preference& pref, int k) {
  return is_k_naples(pref, k) && (k == 0 || !is_k_naples(pref, k - 1));
}

int minimal_k(const Preference& pref) {
  if (pref.empty()) throw DomainError("minimal_k is undefined for the empty preference");
  const int n = static_cast<int>(pref.size());
  for (int k = 0; k < n - 1; ++k) {
    if (is_k_naples(pref, k)) return k;
  }
  return n - 1;
}

bool rearrangements_all_k_naples(const Preference& pref, int k) {
  return is_k_naples(pref.sorted_ascending(), k);
}

Preference parse_preference(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = trim(text.substr(1, text.size() - 2));
  std::vector<int> entries;
  if (text.empty()) return Preference{};
  while (true) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParseError("malformed preference entry '" + std::string(item) + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  try {
    return Preference(std::move(entries));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

namespace {
std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}
}  // namespace

std::string to_string(const Preference& pref) { return join(pref.entries()); }

std::string to_string(const ParkingOutcome& outcome) {
  if (!outcome.ok()) return "fail@" + std::to_string(*outcome.failed_car);
  return "ok: " + join(outcome.assignment);
}

}  // namespace naples
