#include "naples/trees.hpp"

#include <algorithm>
#include <set>

#include "naples/errors.hpp"

namespace naples {

namespace {

constexpr std::string_view kEmptyMarker = "\xE2\x88\x85";  // U+2205

// Each node owns one U and one D step of dyck_from_tree: U before its left
// subtree, D right after it.
struct StepOwner {
  int node;
  Step step;
};

void collect_steps(const BinaryTree& t, int v, std::vector<StepOwner>& out) {
  if (v == BinaryTree::npos) return;
  out.push_back({v, Step::Up});
  collect_steps(t, t.left(v), out);
  out.push_back({v, Step::Down});
  collect_steps(t, t.right(v), out);
}

std::vector<StepOwner> step_owners(const BinaryTree& t) {
  std::vector<StepOwner> out;
  out.reserve(2 * t.size());
  if (!t.empty()) collect_steps(t, t.root(), out);
  return out;
}

std::vector<int> diagonal_depths(const BinaryTree& t) {
  std::vector<int> depth(t.size(), 0);
  // Preorder storage: parents precede children.
  for (std::size_t v = 0; v < t.size(); ++v) {
    const int i = static_cast<int>(v);
    if (t.has_left(i)) depth[t.left(i)] = depth[i] + 1;
    if (t.has_right(i)) depth[t.right(i)] = depth[i];
  }
  return depth;
}

std::size_t walk(const BinaryTree& t, int v, std::size_t pos, std::vector<int>& seen,
                 std::vector<TraversalVisit>& out) {
  auto visit = [&](std::size_t at) { out.push_back({v, ++seen[v], at}); };
  visit(pos);
  std::size_t p = pos + 1;
  if (t.has_left(v)) p = walk(t, t.left(v), p, seen, out);
  ++p;
  if (t.has_left(v) || !t.has_right(v)) visit(p);
  if (t.has_right(v)) {
    p = walk(t, t.right(v), p, seen, out);
    visit(p);
  }
  return p;
}

// Spine of a strict descending tree: left[0] is the root followed by its k-1
// left descendants; right[0] is the root's right child followed by its k left
// descendants.
struct StrictSpine {
  std::vector<int> left;
  std::vector<int> right;
};

bool strict_spine(const BinaryTree& t, int k, StrictSpine& spine) {
  if (k < 1 || t.empty()) return false;
  spine.left.assign(1, t.root());
  for (int i = 1; i < k; ++i) {
    const int next = t.left(spine.left.back());
    if (next == BinaryTree::npos) return false;
    spine.left.push_back(next);
  }
  if (!t.has_right(t.root())) return false;
  spine.right.assign(1, t.right(t.root()));
  for (int i = 1; i <= k; ++i) {
    const int next = t.left(spine.right.back());
    if (next == BinaryTree::npos) return false;
    spine.right.push_back(next);
  }
  return true;
}

struct TreeParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree literal: " + what + " at offset " + std::to_string(pos));
  }

  BinaryTree parse() {
    skip_space();
    if (text.substr(pos, kEmptyMarker.size()) == kEmptyMarker) {
      pos += kEmptyMarker.size();
      return {};
    }
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      return {};
    }
    if (pos >= text.size() || text[pos] != '(') fail("expected '(' or an empty marker");
    ++pos;
    BinaryTree left = parse();
    BinaryTree right = parse();
    skip_space();
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;
    return BinaryTree::join(left, right);
  }
};

void write_tree(const BinaryTree& t, int v, std::string& out) {
  if (v == BinaryTree::npos) {
    out += kEmptyMarker;
    return;
  }
  out += '(';
  write_tree(t, t.left(v), out);
  write_tree(t, t.right(v), out);
  out += ')';
}

}  // namespace

BinaryTree BinaryTree::join(const BinaryTree& left, const BinaryTree& right) {
  BinaryTree out;
  out.nodes_.reserve(1 + left.size() + right.size());
  out.nodes_.push_back({});
  auto append = [&out](const BinaryTree& sub) -> int {
    if (sub.empty()) return npos;
    const int offset = static_cast<int>(out.nodes_.size());
    for (Node n : sub.nodes_) {
      if (n.left != npos) n.left += offset;
      if (n.right != npos) n.right += offset;
      out.nodes_.push_back(n);
    }
    return offset;
  };
  const int l = append(left);
  const int r = append(right);
  out.nodes_[0] = {l, r};
  return out;
}

std::size_t BinaryTree::subtree_size(int i) const {
  if (i == npos) return 0;
  return 1 + subtree_size(nodes_[i].left) + subtree_size(nodes_[i].right);
}

BinaryTree BinaryTree::subtree(int i) const {
  BinaryTree out;
  if (i == npos) return out;
  const std::size_t count = subtree_size(i);
  out.nodes_.assign(nodes_.begin() + i, nodes_.begin() + i + static_cast<std::ptrdiff_t>(count));
  for (Node& n : out.nodes_) {
    if (n.left != npos) n.left -= i;
    if (n.right != npos) n.right -= i;
  }
  return out;
}

int BinaryTree::find(std::string_view address) const {
  if (empty()) throw DomainError("empty tree has no nodes");
  int v = root();
  for (char c : address) {
    if (c != 'L' && c != 'R') throw ParseError(std::string("node address contains '") + c + "'");
    v = (c == 'L') ? left(v) : right(v);
    if (v == npos) throw DomainError("node address '" + std::string(address) + "' is not in the tree");
  }
  return v;
}

NodeAddress BinaryTree::address_of(int i) const {
  std::vector<int> parent(size(), npos);
  std::vector<char> side(size(), 0);
  for (int v = 0; v < static_cast<int>(size()); ++v) {
    if (has_left(v)) {
      parent[left(v)] = v;
      side[left(v)] = 'L';
    }
    if (has_right(v)) {
      parent[right(v)] = v;
      side[right(v)] = 'R';
    }
  }
  NodeAddress out;
  for (int v = i; parent[v] != npos; v = parent[v]) out += side[v];
  std::reverse(out.begin(), out.end());
  return out;
}

FullBinaryTree::FullBinaryTree(BinaryTree tree) : tree_(std::move(tree)) {
  if (tree_.empty()) throw DomainError("a full binary tree has at least one node");
  for (std::size_t v = 0; v < tree_.size(); ++v) {
    const int i = static_cast<int>(v);
    if (tree_.has_left(i) != tree_.has_right(i)) throw DomainError("node with exactly one child in a full tree");
  }
}

FullBinaryTree FullBinaryTree::join(const FullBinaryTree& left, const FullBinaryTree& right) {
  return FullBinaryTree(BinaryTree::join(left.tree_, right.tree_));
}

namespace {

void full_tree_word(const BinaryTree& t, int v, std::string& out) {
  if (t.is_leaf(v)) return;
  out += 'U';
  full_tree_word(t, t.left(v), out);
  out += 'D';
  full_tree_word(t, t.right(v), out);
}

// Length of the shortest nonempty balanced prefix of a Dyck word.
std::size_t first_return(std::string_view w) {
  int h = 0;
  for (std::size_t t = 0; t < w.size(); ++t) {
    h += (w[t] == 'U') ? 1 : -1;
    if (h == 0) return t + 1;
  }
  return w.size();
}

FullBinaryTree full_tree_from_word(std::string_view w) {
  if (w.empty()) return FullBinaryTree::leaf();
  const std::size_t r = first_return(w);
  return FullBinaryTree::join(full_tree_from_word(w.substr(1, r - 2)), full_tree_from_word(w.substr(r)));
}

BinaryTree tree_from_word(std::string_view w) {
  if (w.empty()) return {};
  const std::size_t r = first_return(w);
  return BinaryTree::join(tree_from_word(w.substr(1, r - 2)), tree_from_word(w.substr(r)));
}

}  // namespace

DyckPath dyck_from_full_tree(const FullBinaryTree& tree) {
  std::string steps;
  full_tree_word(tree.tree(), tree.tree().root(), steps);
  return DyckPath(StepWord(std::move(steps)));
}

FullBinaryTree full_tree_from_dyck(const DyckPath& path) { return full_tree_from_word(path.str()); }

BinaryTree prune(const FullBinaryTree& tree) {
  const BinaryTree& t = tree.tree();
  if (t.is_leaf(t.root())) return {};
  return BinaryTree::join(prune(FullBinaryTree(t.left_subtree())), prune(FullBinaryTree(t.right_subtree())));
}

FullBinaryTree graft(const BinaryTree& tree) {
  if (tree.empty()) return FullBinaryTree::leaf();
  return FullBinaryTree::join(graft(tree.left_subtree()), graft(tree.right_subtree()));
}

DyckPath dyck_from_tree(const BinaryTree& tree) {
  std::string steps;
  steps.reserve(2 * tree.size());
  for (const auto& s : step_owners(tree)) steps += static_cast<char>(s.step);
  return DyckPath(StepWord(std::move(steps)));
}


BinaryTree tree_from_dyck(const DyckPath& path) { return tree_from_word(path.str()); }

int diagonal_depth(const BinaryTree& tree, std::string_view address) {
  tree.find(address);
  return static_cast<int>(std::count(address.begin(), address.end(), 'L'));
}

std::vector<TraversalVisit> traversal(const BinaryTree& tree) {
  if (tree.empty()) throw DomainError("the empty tree has no traversal");
  std::vector<TraversalVisit> out;
  std::vector<int> seen(tree.size(), 0);
  walk(tree, tree.root(), 0, seen, out);
  return out;
}

std::vector<NodeAddress> traversal_addresses(const BinaryTree& tree) {
  std::vector<NodeAddress> out;
  for (const auto& v : traversal(tree)) out.push_back(tree.address_of(v.node));
  return out;
}

bool check_traversal_heights(const BinaryTree& tree) {
  if (tree.empty()) throw DomainError("the empty tree has no traversal");
  const auto h = dyck_from_tree(tree).word().heights();
  const auto visits = traversal(tree);
  const auto depth = diagonal_depths(tree);

  std::vector<std::size_t> first(tree.size(), 0);
  std::vector<int> count(tree.size(), 0);
  for (const auto& v : visits) {
    if (v.ordinal == 1) first[v.node] = v.position;
    ++count[v.node];
  }
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const int node = static_cast<int>(i);
    const int expected = (tree.has_left(node) && tree.has_right(node)) ? 3 : 2;
    if (count[i] != expected) return false;
    // Height at a first visit equals the diagonal depth.
    if (h[first[i]] != depth[i]) return false;
    // First visit of a node and of its right child share a height.
    if (tree.has_right(node) && h[first[i]] != h[first[tree.right(node)]]) return false;
  }
  // Every visit of a node sits at the height of its first visit.
  for (const auto& v : visits) {
    if (h[v.position] != h[first[v.node]]) return false;
  }
  // Leaves are visited twice in a row.
  for (std::size_t j = 0; j < visits.size(); ++j) {
    const auto& v = visits[j];
    if (tree.is_leaf(v.node) && v.ordinal == 1 && (j + 1 >= visits.size() || visits[j + 1].node != v.node)) {
      return false;
    }
  }
  // Interior returns to the axis are exactly the first visits of the root's
  // right-spine descendants.
  std::set<std::size_t> returns;
  for (std::size_t t = 1; t + 1 < h.size(); ++t) {
    if (h[t] == 0) returns.insert(t);
  }
  std::set<std::size_t> spine;
  for (int v = tree.right(tree.root()); v != BinaryTree::npos; v = tree.right(v)) spine.insert(first[v]);
  return returns == spine && h.back() == 0;
}

bool ascending_tree_criterion(const BinaryTree& tree, int k) {
  if (k < 0) throw DomainError("backup bound k must be nonnegative");
  const auto steps = step_owners(tree);
  const std::size_t total = steps.size();
  const std::size_t margin = static_cast<std::size_t>(k);
  const bool embedded = total >= 2 * margin &&
                        std::all_of(steps.begin(), steps.begin() + margin, [](auto s) { return s.step == Step::Up; }) &&
                        std::all_of(steps.end() - margin, steps.end(), [](auto s) { return s.step == Step::Down; }) &&
                        (total == 2 * margin || steps[total - margin - 1].step == Step::Down);
  if (!embedded) throw DomainError("tree is not the tree of an embedded k-Dyck path");
  const auto depth = diagonal_depths(tree);
  const std::size_t stop = total >= margin + 1 ? total - margin - 1 : 0;
  // Steps are 1-based below: step s is steps[s-1].
  for (std::size_t s = 1; s <= stop; ++s) {
    const auto& crossing = steps[s - 1];
    if (crossing.step != Step::Down || depth[crossing.node] != k - 1) continue;
    bool found = false;
    for (std::size_t t = s + 2; t <= std::min(total, s + 2 * margin) && !found; ++t) {
      found = depth[steps[t - 1].node] == k;
    }
    if (!found) return false;
  }
  return true;
}

bool is_strict_descending_tree(const BinaryTree& tree, int n, int k) {
  StrictSpine spine;
  if (n < 1 || k < 1 || tree.size() != static_cast<std::size_t>(n + k)) return false;
  return strict_spine(tree, k, spine);
}

std::vector<BinaryTree> strict_tree_slots(const BinaryTree& tree, int k) {
  StrictSpine spine;
  if (!strict_spine(tree, k, spine)) throw DomainError("tree " + to_string(tree) + " lacks the strict spine for k = " + std::to_string(k));
  std::vector<BinaryTree> slots;
  slots.reserve(2 * k + 2);
  slots.push_back(tree.subtree(tree.left(spine.left.back())));
  for (int i = k - 1; i >= 1; --i) slots.push_back(tree.subtree(tree.right(spine.left[i])));
  slots.push_back(tree.subtree(tree.left(spine.right.back())));
  for (int i = k; i >= 0; --i) slots.push_back(tree.subtree(tree.right(spine.right[i])));
  return slots;
}

BinaryTree strict_tree_from_slots(const std::vector<BinaryTree>& slots, int k) {
  if (k < 1) throw DomainError("strict trees need k >= 1");
  if (slots.size() != static_cast<std::size_t>(2 * k + 2)) {
    throw DomainError("expected " + std::to_string(2 * k + 2) + " slots, got " + std::to_string(slots.size()));
  }
  std::size_t idx = 0;
  BinaryTree root_left;
  if (k == 1) {
    root_left = slots[idx++];
  } else {
    root_left = BinaryTree::join(slots[0], slots[1]);
    idx = 2;
    for (int i = k - 2; i >= 1; --i) root_left = BinaryTree::join(root_left, slots[idx++]);
  }
  BinaryTree right = BinaryTree::join(slots[idx], slots[idx + 1]);
  idx += 2;
  for (int i = k - 1; i >= 0; --i) right = BinaryTree::join(right, slots[idx++]);
  return BinaryTree::join(root_left, right);
}

BinaryTree strict_tree_from_descending(const Preference& pref, int k) {
  const KDyckPath path = path_from_descending_pref(pref);
  if (k < 1 || path.bound() != k) {
    throw DomainError("preference " + to_string(pref) + " is not strictly " + std::to_string(k) + "-Naples");
  }
  return tree_from_dyck(reflect_after_first_return(embed(path, k), k));
}

Preference descending_from_strict_tree(const BinaryTree& tree, int k) {
  const int n = static_cast<int>(tree.size()) - k;
  if (!is_strict_descending_tree(tree, n, k)) {
    throw DomainError("tree " + to_string(tree) + " is not a strict descending tree for k = " + std::to_string(k));
  }
  return descending_pref_from_path(unembed(reflect_after_first_return(dyck_from_tree(tree), k), k));
}

BinaryTree parse_tree(std::string_view text) {
  TreeParser parser{text};
  BinaryTree out = parser.parse();
  parser.skip_space();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return out;
}

std::string to_string(const BinaryTree& tree) {
  std::string out;
  write_tree(tree, tree.empty() ? BinaryTree::npos : tree.root(), out);
  return out;
}

std::vector<BinaryTree> all_binary_trees(int nodes) {
  if (nodes < 0) return {};
  std::vector<std::vector<BinaryTree>> by_size(nodes + 1);
  by_size[0] = {BinaryTree{}};
  for (int m = 1; m <= nodes; ++m) {
    for (int a = 0; a < m; ++a) {
      for (const auto& l : by_size[a]) {
        for (const auto& r : by_size[m - 1 - a]) by_size[m].push_back(BinaryTree::join(l, r));
      }
    }
  }
  return by_size[nodes];
}

}  // namespace naples
