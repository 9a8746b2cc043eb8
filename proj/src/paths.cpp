#include "naples/paths.hpp"

#include <algorithm>

#include "naples/errors.hpp"

namespace naples {

namespace {

void check_k(int k) {
  if (k < 0) throw DomainError("backup bound k must be nonnegative, got " + std::to_string(k));
}

StepWord complement_reversed(std::string_view steps) {
  std::string out(steps.rbegin(), steps.rend());
  for (char& c : out) c = (c == 'U') ? 'D' : 'U';
  return StepWord(std::move(out));
}

}  // namespace

StepWord::StepWord(std::string steps) : steps_(std::move(steps)) {
  for (char c : steps_) {
    if (c != 'U' && c != 'D') throw DomainError(std::string("step word contains '") + c + "'");
  }
}

std::size_t StepWord::up_count() const { return std::count(steps_.begin(), steps_.end(), 'U'); }

std::vector<int> StepWord::heights() const {
  std::vector<int> h(steps_.size() + 1, 0);
  for (std::size_t t = 0; t < steps_.size(); ++t) h[t + 1] = h[t] + (steps_[t] == 'U' ? 1 : -1);
  return h;
}

int StepWord::min_height() const {
  const auto h = heights();
  return *std::min_element(h.begin(), h.end());
}

DyckPath::DyckPath(StepWord word) : word_(std::move(word)) {
  if (word_.up_count() != word_.down_count()) throw DomainError("Dyck path '" + word_.str() + "' is unbalanced");
  if (word_.min_height() < 0) throw DomainError("Dyck path '" + word_.str() + "' goes below the axis");
}

KDyckPath::KDyckPath(StepWord word) : word_(std::move(word)) {
  if (word_.up_count() != word_.down_count()) throw DomainError("k-Dyck path '" + word_.str() + "' is unbalanced");
  if (!word_.empty() && word_[word_.size() - 1] != Step::Down) {
    throw DomainError("k-Dyck path '" + word_.str() + "' does not end with a D step");
  }
  bound_ = -word_.min_height();
}

Preference ascending_pref_from_path(const KDyckPath& path) {
  std::vector<int> entries;
  entries.reserve(path.length());
  int downs = 0;
  for (char c : path.str()) {
    if (c == 'D') {
      ++downs;
    } else {
      entries.push_back(downs + 1);
    }
  }
  return Preference(std::move(entries));
}

KDyckPath path_from_ascending_pref(const Preference& pref) {
  if (!pref.is_ascending()) throw DomainError("preference " + to_string(pref) + " is not ascending");
  std::string steps;
  steps.reserve(2 * pref.size());
  int downs = 0;
  for (int a : pref.entries()) {
    for (; downs < a - 1; ++downs) steps += 'D';
    steps += 'U';
  }
  for (; downs < static_cast<int>(pref.size()); ++downs) steps += 'D';
  return KDyckPath(StepWord(std::move(steps)));
}

Preference descending_pref_from_path(const KDyckPath& path) {
  return ascending_pref_from_path(path).sorted_descending();
}

KDyckPath path_from_descending_pref(const Preference& pref) {
  if (!pref.is_descending()) throw DomainError("preference " + to_string(pref) + " is not descending");
  return path_from_ascending_pref(pref.sorted_ascending());
}

bool ascending_is_k_naples_path(const KDyckPath& path, int k) {
  check_k(k);
  const auto h = path.word().heights();
  const std::size_t steps = path.word().size();
  for (std::size_t s = 1; s <= steps; ++s) {
    if (h[s - 1] < 0 || h[s] >= 0) continue;
    const std::size_t last = std::min(steps, s + 2 * static_cast<std::size_t>(k));
    bool recovered = false;
    for (std::size_t t = s + 1; t <= last && !recovered; ++t) recovered = h[t] >= 1;
    if (!recovered) return false;
  }
  return true;
}

DyckPath embed(const KDyckPath& path, int k) {
  check_k(k);
  if (!path.fits(k)) {
    throw DomainError("path '" + path.str() + "' reaches depth " + std::to_string(path.bound()) + " > k = " +
                      std::to_string(k));
  }
  return DyckPath(StepWord::repeat(Step::Up, k) + path.word() + StepWord::repeat(Step::Down, k));
}

KDyckPath unembed(const DyckPath& path, int k) {
  check_k(k);
  const std::string& w = path.str();
  const std::size_t margin = static_cast<std::size_t>(k);
  if (w.size() < 2 * margin) throw DomainError("path '" + w + "' is too short for k = " + std::to_string(k));
  const std::string_view inner = std::string_view(w).substr(margin, w.size() - 2 * margin);
  const bool starts_up = std::all_of(w.begin(), w.begin() + margin, [](char c) { return c == 'U'; });
  const bool ends_down = std::all_of(w.end() - margin, w.end(), [](char c) { return c == 'D'; });
  if (!starts_up || !ends_down || (!inner.empty() && inner.back() != 'D')) {
    throw DomainError("path '" + w + "' lacks the U^k prefix / D^(k+1) suffix for k = " + std::to_string(k));
  }
  KDyckPath out{StepWord(std::string(inner))};
  // Guaranteed by the prefix, but the height argument relies on it.
  if (!out.fits(k)) throw DomainError("inner path of '" + w + "' goes below -k");
  return out;
}

bool embedded_ascending_criterion(const DyckPath& path, int k) {
  check_k(k);
  const auto h = path.word().heights();
  const std::size_t steps = path.word().size();
  const std::size_t tail = static_cast<std::size_t>(k) + 1;
  const std::size_t stop = steps >= tail ? steps - tail : 0;
  for (std::size_t s = 1; s <= stop; ++s) {
    if (!(h[s - 1] == k && h[s] == k - 1)) continue;
    const std::size_t last = std::min(steps, s + 2 * static_cast<std::size_t>(k));
    bool recovered = false;
    for (std::size_t t = s + 1; t <= last && !recovered; ++t) recovered = h[t] >= k + 1;
    if (!recovered) return false;
  }
  return true;
}

bool is_strictly_k(const KDyckPath& path, int k) {
  check_k(k);
  if (!path.fits(k)) throw DomainError("path '" + path.str() + "' is not a " + std::to_string(k) + "-Dyck path");
  return path.bound() == k;
}

std::size_t first_interior_return(const DyckPath& path) {
  const auto h = path.word().heights();
  for (std::size_t t = 1; t + 1 < h.size(); ++t) {
    if (h[t] == 0) return t;
  }
  return 0;
}

DyckPath reflect_after_first_return(const DyckPath& path, int k) {
  check_k(k);
  const std::string& w = path.str();
  if (w.size() < static_cast<std::size_t>(k) ||
      !std::all_of(w.begin(), w.begin() + k, [](char c) { return c == 'U'; })) {
    throw DomainError("path '" + w + "' does not start with " + std::to_string(k) + " U steps");
  }
  const std::size_t ret = first_interior_return(path);
  if (ret == 0) throw DomainError("path '" + w + "' never returns to the axis before its end");
  return DyckPath(StepWord(w.substr(0, ret)) + complement_reversed(std::string_view(w).substr(ret)));
}

StepWord parse_step_word(std::string_view text) {
  std::string steps;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c != 'U' && c != 'D') throw ParseError(std::string("unexpected character '") + c + "' in step word");
    steps += c;
  }
  return StepWord(std::move(steps));
}

DyckPath parse_dyck_path(std::string_view text) {
  try {
    return DyckPath(parse_step_word(text));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

KDyckPath parse_k_dyck_path(std::string_view text) {
  try {
    return KDyckPath(parse_step_word(text));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace naples
