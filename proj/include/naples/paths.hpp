#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "naples/parking.hpp"

namespace naples {

enum class Step : char { Up = 'U', Down = 'D' };

/// A word over {U, D}. Heights are indexed by the number of steps taken:
/// height(0) = 0 and height(t) = #U - #D among the first t steps.
class StepWord {
 public:
  StepWord() = default;
  explicit StepWord(std::string steps);

  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  Step operator[](std::size_t i) const { return static_cast<Step>(steps_[i]); }
  const std::string& str() const { return steps_; }

  std::size_t up_count() const;
  std::size_t down_count() const { return size() - up_count(); }
  std::vector<int> heights() const;
  int min_height() const;

  StepWord& operator+=(const StepWord& other) {
    steps_ += other.steps_;
    return *this;
  }
  friend StepWord operator+(StepWord a, const StepWord& b) { return a += b; }

  bool operator==(const StepWord&) const = default;
  auto operator<=>(const StepWord&) const = default;

  static StepWord repeat(Step s, std::size_t count) { return StepWord(std::string(count, static_cast<char>(s))); }

 private:
  std::string steps_;
};

/// Balanced word whose heights never go negative. length() is the number of
/// U steps.
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(StepWord word);

  const StepWord& word() const { return word_; }
  std::size_t length() const { return word_.size() / 2; }
  const std::string& str() const { return word_.str(); }

  bool operator==(const DyckPath&) const = default;

 private:
  StepWord word_;
};

/// Balanced word ending in D (when nonempty). The bound is the deepest the
/// path goes below the axis; it is a k-Dyck path for every k >= bound().
class KDyckPath {
 public:
  KDyckPath() = default;
  explicit KDyckPath(StepWord word);

  const StepWord& word() const { return word_; }
  std::size_t length() const { return word_.size() / 2; }
  int bound() const { return bound_; }
  bool fits(int k) const { return bound_ <= k; }
  const std::string& str() const { return word_.str(); }

  bool operator==(const KDyckPath&) const = default;

 private:
  StepWord word_;
  int bound_ = 0;
};

/// a_i = 1 + (number of D steps before the i-th U step).
Preference ascending_pref_from_path(const KDyckPath& path);
/// Inverse of ascending_pref_from_path. Rejects non-ascending input.
KDyckPath path_from_ascending_pref(const Preference& pref);

Preference descending_pref_from_path(const KDyckPath& path);
/// Rejects non-descending input.
KDyckPath path_from_descending_pref(const Preference& pref);

/// Path test for the ascending preference read off `path`: every D step that
/// takes the path from height 0 to -1 at step s must be followed by some
/// t in (s, s + 2k] with height(t) >= 1. Paths deeper than k always fail.
bool ascending_is_k_naples_path(const KDyckPath& path, int k);

/// Prepends k U steps and appends k D steps. Throws if the path goes below -k.
DyckPath embed(const KDyckPath& path, int k);
/// Strips the k-step margins added by embed. The word must start with k U
/// steps and (when the inner path is nonempty) end with k+1 D steps.
KDyckPath unembed(const DyckPath& path, int k);

/// The embedded form of ascending_is_k_naples_path: ahead of the final k+1
/// D steps, every D step from height k to k-1 must be followed within 2k steps
/// by a point at height k+1.
bool embedded_ascending_criterion(const DyckPath& path, int k);

/// True iff the path touches -k. Requires path.fits(k).
bool is_strictly_k(const KDyckPath& path, int k);

/// Index (number of steps taken) of the first return to height 0, or 0 if
/// the path only returns at its end (or is empty).
std::size_t first_interior_return(const DyckPath& path);

/// Reverses and complements the suffix after the first return to height 0.
/// The path must start with k U steps and return to 0 before its last step.
/// Exchanges "ends with k+1 D" and "k+1 U right after the first return".
DyckPath reflect_after_first_return(const DyckPath& path, int k);

// Text forms are plain U/D strings; the empty path is the empty string.
StepWord parse_step_word(std::string_view text);
DyckPath parse_dyck_path(std::string_view text);
KDyckPath parse_k_dyck_path(std::string_view text);

}  // namespace naples
