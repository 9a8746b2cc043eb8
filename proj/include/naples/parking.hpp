#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace naples {

/// A parking preference: car i (1-based) prefers spot entries[i-1].
/// Every entry lies in [1, n] where n is the number of cars (and spots).
class Preference {
 public:
  Preference() = default;
  explicit Preference(std::vector<int> entries);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const { return entries_; }

  bool is_ascending() const;
  bool is_descending() const;
  Preference sorted_ascending() const;
  Preference sorted_descending() const;

  bool operator==(const Preference&) const = default;
  auto operator<=>(const Preference&) const = default;

 private:
  std::vector<int> entries_;
};

/// Result of running the parking process. On success `assignment[i]` is the
/// spot taken by car i+1; on failure `failed_car` is the first car (1-based)
/// that found no spot and the simulation stopped there.
struct ParkingOutcome {
  std::vector<int> assignment;
  std::optional<int> failed_car;

  bool ok() const { return !failed_car.has_value(); }

  static ParkingOutcome success(std::vector<int> spots) { return {std::move(spots), std::nullopt}; }
  static ParkingOutcome failure(int car) { return {{}, car}; }

  bool operator==(const ParkingOutcome&) const = default;
};

/// A lot in which the first |parked| cars already sit in the listed spots and
/// the remaining cars still have to park.
class FilledPreference {
 public:
  FilledPreference(std::vector<int> parked, std::vector<int> remaining);

  std::size_t size() const { return parked_.size() + remaining_.size(); }
  std::span<const int> parked() const { return parked_; }
  std::span<const int> remaining() const { return remaining_; }

 private:
  std::vector<int> parked_;
  std::vector<int> remaining_;
};

/// Runs the k-Naples rule: a car whose preferred spot is taken first backs up
/// through spots a-1, a-2, ..., max(1, a-k) (nearest first) and otherwise
/// drives forward. k = 0 is the classical rule.
ParkingOutcome park(const Preference& pref, int k);

/// Continues the k-Naples process from a partially filled lot. The returned
/// assignment lists the prefilled spots followed by the newly taken ones.
ParkingOutcome park_filled(const FilledPreference& fp, int k);

bool is_k_naples(const Preference& pref, int k);

/// k-Naples but not (k-1)-Naples. Every 0-Naples preference is strictly 0.
bool is_strictly_k_naples(const Preference& pref, int k);

/// Smallest k with is_k_naples(pref, k). Requires a nonempty preference;
/// the answer never exceeds n-1.
int minimal_k(const Preference& pref);

/// Whether every rearrangement of `pref` is k-Naples, decided from the
/// ascending rearrangement alone.
bool rearrangements_all_k_naples(const Preference& pref, int k);

// Text forms: "6,6,6,5,5,2,1" for preferences (empty string for n = 0) and
// "ok: 6,5,4,3,7,2,1" / "fail@5" for outcomes.
Preference parse_preference(std::string_view text);
std::string to_string(const Preference& pref);
std::string to_string(const ParkingOutcome& outcome);

}  // namespace naples
