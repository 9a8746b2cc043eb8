#include "naples/catalan_objects.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "naples/errors.hpp"

namespace naples {

namespace {

Diagonal normalized(int a, int b) { return a < b ? Diagonal{a, b} : Diagonal{b, a}; }

bool crosses(const Diagonal& x, const Diagonal& y) {
  return (x.first < y.first && y.first < x.second && x.second < y.second) ||
         (y.first < x.first && x.first < y.second && y.second < x.second);
}

// Splits the polygon (cyclic vertex list) along any chord joining two
// non-neighbouring corners until no chord is left; collects the faces.
void collect_faces(const std::vector<int>& polygon, const std::set<Diagonal>& chords,
                   std::vector<std::vector<int>>& faces) {
  const std::size_t size = polygon.size();
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 2; j < size; ++j) {
      if (i == 0 && j == size - 1) continue;
      if (!chords.contains(normalized(polygon[i], polygon[j]))) continue;
      std::vector<int> inner(polygon.begin() + i, polygon.begin() + j + 1);
      std::vector<int> outer(polygon.begin(), polygon.begin() + i + 1);
      outer.insert(outer.end(), polygon.begin() + j, polygon.end());
      collect_faces(inner, chords, faces);
      collect_faces(outer, chords, faces);
      return;
    }
  }
  faces.push_back(polygon);
}

std::vector<std::vector<int>> faces_of(const Dissection& d) {
  std::vector<int> polygon(d.s);
  for (int v = 0; v < d.s; ++v) polygon[v] = v;
  std::vector<std::vector<int>> faces;
  collect_faces(polygon, std::set<Diagonal>(d.diagonals.begin(), d.diagonals.end()), faces);
  return faces;
}

void check_strict_params(int n, int k) {
  if (k < 1) throw DomainError("strict descending objects need k >= 1, got k = " + std::to_string(k));
  if (n < k + 1) throw DomainError("no strictly " + std::to_string(k) + "-Naples preferences of length " + std::to_string(n));
}

void check_strict_tree(const BinaryTree& tree, int n, int k) {
  check_strict_params(n, k);
  if (!is_strict_descending_tree(tree, n, k)) {
    throw DomainError("tree " + to_string(tree) + " is not a strict descending tree for n = " + std::to_string(n) +
                      ", k = " + std::to_string(k));
  }
}

void sort_blocks(std::vector<std::vector<int>>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

}  // namespace

void validate(const Dissection& d) {
  if (d.r < 3 || d.s < d.r) throw DomainError("need 3 <= r <= s, got r = " + std::to_string(d.r) + ", s = " + std::to_string(d.s));
  std::set<Diagonal> seen;
  for (const auto& [a, b] : d.diagonals) {
    if (a < 0 || b >= d.s || a >= b) throw DomainError("diagonal (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    if (b - a < 2 || (a == 0 && b == d.s - 1)) {
      throw DomainError("(" + std::to_string(a) + "," + std::to_string(b) + ") is a side, not a diagonal");
    }
    if (!seen.insert({a, b}).second) throw DomainError("repeated diagonal");
  }
  for (std::size_t i = 0; i < d.diagonals.size(); ++i) {
    for (std::size_t j = i + 1; j < d.diagonals.size(); ++j) {
      if (crosses(d.diagonals[i], d.diagonals[j])) throw DomainError("crossing diagonals");
    }
  }
  int central = 0;
  bool zero_on_central = false;
  for (const auto& face : faces_of(d)) {
    if (static_cast<int>(face.size()) == d.r) {
      ++central;
      zero_on_central = std::find(face.begin(), face.end(), 0) != face.end();
    } else if (face.size() != 3) {
      throw DomainError("face with " + std::to_string(face.size()) + " corners");
    }
  }
  // r = 3 would make the central face indistinguishable from the triangles.
  if (central != 1 || d.r == 3) throw DomainError("expected exactly one " + std::to_string(d.r) + "-gon face");
  if (!zero_on_central) throw DomainError("vertex 0 is not a corner of the central face");
}

std::vector<int> central_face(const Dissection& d) {
  for (auto face : faces_of(d)) {
    if (static_cast<int>(face.size()) == d.r) {
      std::sort(face.begin(), face.end());
      return face;
    }
  }
  throw DomainError("dissection has no " + std::to_string(d.r) + "-gon face");
}

std::vector<Diagonal> triangulation_from_tree(const BinaryTree& tree, const std::vector<int>& polygon) {
  if (polygon.size() != tree.size() + 2) throw DomainError("polygon size does not match the tree");
  std::vector<Diagonal> chords;
  if (tree.empty()) return chords;
  const BinaryTree left = tree.left_subtree();
  const BinaryTree right = tree.right_subtree();
  const std::size_t apex = left.size() + 1;
  const std::vector<int> lower(polygon.begin(), polygon.begin() + apex + 1);
  const std::vector<int> upper(polygon.begin() + apex, polygon.end());
  if (lower.size() > 2) chords.push_back(normalized(lower.front(), lower.back()));
  if (upper.size() > 2) chords.push_back(normalized(upper.front(), upper.back()));
  for (const auto& c : triangulation_from_tree(left, lower)) chords.push_back(c);
  for (const auto& c : triangulation_from_tree(right, upper)) chords.push_back(c);
  return chords;
}

namespace {
BinaryTree tree_from_chords(const std::vector<int>& polygon, const std::set<Diagonal>& chords) {
  if (polygon.size() < 2) throw DomainError("degenerate polygon");
  if (polygon.size() == 2) return {};
  auto joined = [&](std::size_t i, std::size_t j) { return j == i + 1 || chords.contains(normalized(polygon[i], polygon[j])); };
  const std::size_t last = polygon.size() - 1;
  for (std::size_t apex = 1; apex < last; ++apex) {
    if (!joined(0, apex) || !joined(apex, last)) continue;
    const std::vector<int> lower(polygon.begin(), polygon.begin() + apex + 1);
    const std::vector<int> upper(polygon.begin() + apex, polygon.end());
    return BinaryTree::join(tree_from_chords(lower, chords), tree_from_chords(upper, chords));
  }
  throw DomainError("region is not triangulated");
}
}  // namespace

BinaryTree tree_from_triangulation(const std::vector<int>& polygon, const std::vector<Diagonal>& chords) {
  std::set<Diagonal> set;
  for (const auto& [a, b] : chords) set.insert(normalized(a, b));
  return tree_from_chords(polygon, set);
}

namespace {
// Clockwise corner lists of the regions attached to each central side, the
// first one on the distinguished side (0, corners[1]).
std::vector<std::vector<int>> slot_regions(const std::vector<int>& corners, int s) {
  std::vector<std::vector<int>> regions;
  for (std::size_t j = 0; j < corners.size(); ++j) {
    const int from = corners[j];
    const int to = (j + 1 < corners.size()) ? corners[j + 1] : s;
    std::vector<int> region;
    for (int v = from; v <= to; ++v) region.push_back(v % s);
    regions.push_back(std::move(region));
  }
  return regions;
}
}  // namespace

Dissection dissection_from_strict(const BinaryTree& tree, int n, int k) {
  check_strict_tree(tree, n, k);
  const auto slots = strict_tree_slots(tree, k);
  Dissection d{n + k + 1, 2 * k + 2, {}};
  std::vector<int> corners{0};
  for (std::size_t j = 0; j + 1 < slots.size(); ++j) corners.push_back(corners.back() + static_cast<int>(slots[j].size()) + 1);
  const auto regions = slot_regions(corners, d.s);
  for (std::size_t j = 0; j < slots.size(); ++j) {
    const auto& region = regions[j];
    if (!slots[j].empty()) d.diagonals.push_back(normalized(region.front(), region.back()));
    for (const auto& c : triangulation_from_tree(slots[j], region)) d.diagonals.push_back(c);
  }
  std::sort(d.diagonals.begin(), d.diagonals.end());
  return d;
}

BinaryTree strict_from_dissection(const Dissection& d, int n, int k) {
  check_strict_params(n, k);
  validate(d);
  if (d.s != n + k + 1 || d.r != 2 * k + 2) {
    throw DomainError("expected a " + std::to_string(2 * k + 2) + "-in-" + std::to_string(n + k + 1) + " dissection");
  }
  const std::set<Diagonal> chords(d.diagonals.begin(), d.diagonals.end());
  std::vector<BinaryTree> slots;
  for (const auto& region : slot_regions(central_face(d), d.s)) slots.push_back(tree_from_chords(region, chords));
  return strict_tree_from_slots(slots, k);
}

bool is_non_crossing(const std::vector<std::vector<int>>& blocks) {
  std::map<int, std::size_t> owner;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) {
      if (!owner.emplace(x, b).second) throw DomainError("element " + std::to_string(x) + " in two blocks");
    }
  }
  std::vector<std::pair<int, int>> span(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto [lo, hi] = std::minmax_element(blocks[b].begin(), blocks[b].end());
    span[b] = {*lo, *hi};
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<int> sorted = blocks[b];
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
      // Anything strictly between consecutive members must be nested inside.
      for (auto it = owner.upper_bound(sorted[i]); it != owner.end() && it->first < sorted[i + 1]; ++it) {
        const auto& [lo, hi] = span[it->second];
        if (lo < sorted[i] || hi > sorted[i + 1]) return false;
      }
    }
  }
  return true;
}

void validate(const RootedNcp& p) {
  if (p.m < 1) throw DomainError("rooted partition of an empty set");
  std::vector<std::vector<int>> all{p.root};
  all.insert(all.end(), p.blocks.begin(), p.blocks.end());
  std::vector<char> seen(p.m + 1, 0);
  int count = 0;
  for (const auto& b : all) {
    if (b.empty()) throw DomainError("empty block");
    for (int x : b) {
      if (x < 1 || x > p.m) throw DomainError("element " + std::to_string(x) + " outside [1, " + std::to_string(p.m) + "]");
      if (seen[x]) throw DomainError("element " + std::to_string(x) + " in two blocks");
      seen[x] = 1;
      ++count;
    }
  }
  if (count != p.m) throw DomainError("blocks do not cover [1, " + std::to_string(p.m) + "]");
  if (std::find(p.root.begin(), p.root.end(), 1) == p.root.end()) throw DomainError("1 is not in the root block");
  if (!is_non_crossing(all)) throw DomainError("blocks cross");
}

std::vector<std::vector<int>> ncp_from_tree(const BinaryTree& tree, int first) {
  std::vector<std::vector<int>> blocks;
  if (tree.empty()) return blocks;
  const BinaryTree left = tree.left_subtree();
  const BinaryTree right = tree.right_subtree();
  blocks = ncp_from_tree(left, first + 1);
  auto upper = ncp_from_tree(right, first + 1 + static_cast<int>(left.size()));
  if (right.empty()) {
    blocks.push_back({first});
  } else {
    const int next = first + 1 + static_cast<int>(left.size());
    for (auto& b : upper) {
      if (std::find(b.begin(), b.end(), next) != b.end()) b.insert(b.begin(), first);
    }
  }
  blocks.insert(blocks.end(), upper.begin(), upper.end());
  sort_blocks(blocks);
  return blocks;
}

BinaryTree tree_from_ncp(const std::vector<std::vector<int>>& blocks, int first) {
  if (blocks.empty()) return {};
  std::size_t size = 0;
  for (const auto& b : blocks) size += b.size();
  const int end = first + static_cast<int>(size);  // one past the last element
  std::vector<bool> seen(size, false);
  for (const auto& b : blocks) {
    for (int e : b) {
      if (e < first || e >= end || seen[e - first]) throw DomainError("partition is not on a contiguous range");
      seen[e - first] = true;
    }
  }
  std::vector<int> head;
  for (const auto& b : blocks) {
    if (std::find(b.begin(), b.end(), first) != b.end()) head = b;
  }
  if (head.empty()) throw DomainError("partition does not contain " + std::to_string(first));
  std::sort(head.begin(), head.end());
  const int next = head.size() > 1 ? head[1] : end;
  std::vector<std::vector<int>> lower;
  std::vector<std::vector<int>> upper;
  for (const auto& b : blocks) {
    if (std::find(b.begin(), b.end(), first) != b.end()) {
      if (head.size() > 1) upper.emplace_back(head.begin() + 1, head.end());
      continue;
    }
    const auto [lo, hi] = std::minmax_element(b.begin(), b.end());
    if (*hi < next) {
      lower.push_back(b);
    } else if (*lo > next) {
      upper.push_back(b);
    } else {
      throw DomainError("blocks cross");
    }
  }
  return BinaryTree::join(tree_from_ncp(lower, first + 1), tree_from_ncp(upper, next));
}

RootedNcp ncp_from_strict(const BinaryTree& tree, int n, int k) {
  check_strict_tree(tree, n, k);
  const auto slots = strict_tree_slots(tree, k);
  RootedNcp p{n + k + 1, {}, {}};
  int element = 1;
  for (const auto& slot : slots) {
    p.root.push_back(element);
    for (auto& b : ncp_from_tree(slot, element + 1)) p.blocks.push_back(std::move(b));
    element += static_cast<int>(slot.size()) + 1;
  }
  sort_blocks(p.blocks);
  return p;
}

BinaryTree strict_from_ncp(const RootedNcp& p, int n, int k) {
  check_strict_params(n, k);
  validate(p);
  if (p.m != n + k + 1) throw DomainError("expected a partition of [" + std::to_string(n + k + 1) + "]");
  if (p.root.size() != static_cast<std::size_t>(2 * k + 2)) {
    throw DomainError("root block must have " + std::to_string(2 * k + 2) + " elements");
  }
  std::vector<int> root = p.root;
  std::sort(root.begin(), root.end());
  root.push_back(p.m + 1);
  std::vector<std::vector<std::vector<int>>> gaps(2 * k + 2);
  for (const auto& b : p.blocks) {
    const auto gap = std::upper_bound(root.begin(), root.end(), b.front()) - root.begin() - 1;
    gaps[gap].push_back(b);
  }
  std::vector<BinaryTree> slots;
  for (std::size_t j = 0; j < gaps.size(); ++j) slots.push_back(tree_from_ncp(gaps[j], root[j] + 1));
  return strict_tree_from_slots(slots, k);
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
  }
  bool done() const { return pos >= text.size(); }
  bool peek(char c) const { return !done() && text[pos] == c; }
  void expect(std::string_view token) {
    if (text.substr(pos, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos += token.size();
  }
  int integer() {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) fail("expected an integer");
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }
  std::vector<int> braced() {
    expect("{");
    std::vector<int> out;
    if (!peek('}')) {
      out.push_back(integer());
      while (peek(',')) {
        ++pos;
        out.push_back(integer());
      }
    }
    expect("}");
    return out;
  }
};

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out += c;
  }
  return out;
}

std::string braced(const std::vector<int>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "}";
}

}  // namespace

Dissection parse_dissection(std::string_view text) {
  const std::string compact = strip_spaces(text);
  Cursor c{compact};
  Dissection d;
  c.expect("s=");
  d.s = c.integer();
  c.expect(";r=");
  d.r = c.integer();
  c.expect(";diag=");
  while (c.peek('(')) {
    c.expect("(");
    const int a = c.integer();
    c.expect(",");
    const int b = c.integer();
    c.expect(")");
    d.diagonals.push_back(normalized(a, b));
    if (c.peek(',')) ++c.pos;
  }
  if (!c.done()) c.fail("trailing input");
  std::sort(d.diagonals.begin(), d.diagonals.end());
  return d;
}

std::string to_string(const Dissection& d) {
  std::string out = "s=" + std::to_string(d.s) + ";r=" + std::to_string(d.r) + ";diag=";
  for (std::size_t i = 0; i < d.diagonals.size(); ++i) {
    if (i) out += ',';
    out += "(" + std::to_string(d.diagonals[i].first) + "," + std::to_string(d.diagonals[i].second) + ")";
  }
  return out;
}

RootedNcp parse_rooted_ncp(std::string_view text) {
  const std::string compact = strip_spaces(text);
  Cursor c{compact};
  RootedNcp p;
  c.expect("root=");
  p.root = c.braced();
  c.expect(";blocks=");
  while (c.peek('{')) {
    p.blocks.push_back(c.braced());
    if (c.peek(',')) ++c.pos;
  }
  if (!c.done()) c.fail("trailing input");
  std::sort(p.root.begin(), p.root.end());
  if (p.root.empty()) throw ParseError("root block is empty");
  for (const auto& b : p.blocks) {
    if (b.empty()) throw ParseError("empty block");
  }
  sort_blocks(p.blocks);
  int largest = p.root.back();
  for (const auto& b : p.blocks) largest = std::max(largest, b.back());
  p.m = largest;
  return p;
}

std::string to_string(const RootedNcp& p) {
  std::string out = "root=" + braced(p.root) + ";blocks=";
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) out += ',';
    out += braced(p.blocks[i]);
  }
  return out;
}

}  // namespace naples
