#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "naples/parking.hpp"

// Brute-force enumeration over preferences. Only park() is consulted, so no
// bijection or counting code can influence these results.
namespace naples::oracle {

enum class Shape { all, ascending, descending };
enum class Predicate { none, k_naples, strictly_k_naples, rearrangement_closed };

struct EnumerationSpec {
  int n = 0;
  Shape shape = Shape::all;
  int k = 0;
  Predicate predicate = Predicate::none;
};

/// Largest n accepted for a shape: 7 for all preferences, 12 for the
/// monotone shapes. NAPLES_MAX_N, when set, replaces both.
int max_n(Shape shape);

/// Throws DomainError for n < 0, k < 0 or n above the cap.
void validate(const EnumerationSpec& spec);

/// Preferences of the given shape passing the predicate, in lexicographic order.
void enumerate(const EnumerationSpec& spec, const std::function<void(const Preference&)>& visit);
std::vector<Preference> enumerate(const EnumerationSpec& spec);
std::uint64_t brute_count(const EnumerationSpec& spec);

/// Each distinct rearrangement of pref, once, in lexicographic order.
void distinct_rearrangements(const Preference& pref, const std::function<void(const Preference&)>& visit);
/// Every distinct rearrangement parks under the k-Naples rule.
bool all_rearrangements_park(const Preference& pref, int k);

bool satisfies(const Preference& pref, int k, Predicate predicate);

Shape parse_shape(std::string_view text);
Predicate parse_predicate(std::string_view text);

}  // namespace naples::oracle
