#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "naples/paths.hpp"

namespace naples {

/// Path from the root as a string of 'L'/'R' moves; the root is "".
using NodeAddress = std::string;

/// A rooted binary tree (possibly empty) in which every node has an optional
/// left and an optional right child. Nodes are stored in preorder, so two
/// trees compare equal exactly when they have the same shape.
class BinaryTree {
 public:
  static constexpr int npos = -1;

  struct Node {
    int left = npos;
    int right = npos;
    bool operator==(const Node&) const = default;
  };

  BinaryTree() = default;

  static BinaryTree single() { return join(BinaryTree{}, BinaryTree{}); }
  /// A new root with the given (possibly empty) subtrees.
  static BinaryTree join(const BinaryTree& left, const BinaryTree& right);

  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  /// Root index; only valid when nonempty.
  int root() const { return 0; }
  const Node& node(int i) const { return nodes_[i]; }
  int left(int i) const { return nodes_[i].left; }
  int right(int i) const { return nodes_[i].right; }
  bool has_left(int i) const { return nodes_[i].left != npos; }
  bool has_right(int i) const { return nodes_[i].right != npos; }
  bool is_leaf(int i) const { return !has_left(i) && !has_right(i); }

  /// Copy of the subtree rooted at node i; the empty tree for npos.
  BinaryTree subtree(int i) const;
  BinaryTree left_subtree() const { return empty() ? BinaryTree{} : subtree(left(0)); }
  BinaryTree right_subtree() const { return empty() ? BinaryTree{} : subtree(right(0)); }

  /// Throws DomainError when the address leaves the tree.
  int find(std::string_view address) const;
  NodeAddress address_of(int i) const;

  bool operator==(const BinaryTree&) const = default;

 private:
  std::size_t subtree_size(int i) const;

  std::vector<Node> nodes_;
};

/// A nonempty binary tree in which every node has 0 or 2 children.
class FullBinaryTree {
 public:
  FullBinaryTree() : tree_(BinaryTree::single()) {}
  explicit FullBinaryTree(BinaryTree tree);

  static FullBinaryTree leaf() { return FullBinaryTree{}; }
  static FullBinaryTree join(const FullBinaryTree& left, const FullBinaryTree& right);

  const BinaryTree& tree() const { return tree_; }
  std::size_t size() const { return tree_.size(); }

  bool operator==(const FullBinaryTree&) const = default;

 private:
  BinaryTree tree_;
};

/// B(T) = U B(T_left) D B(T_right), with the empty word for a single leaf.
DyckPath dyck_from_full_tree(const FullBinaryTree& tree);
FullBinaryTree full_tree_from_dyck(const DyckPath& path);

/// Drops the leaves of a full tree; graft adds them back.
BinaryTree prune(const FullBinaryTree& tree);
FullBinaryTree graft(const BinaryTree& tree);

/// Shorthands for the tree <-> Dyck correspondence through graft/prune.
DyckPath dyck_from_tree(const BinaryTree& tree);
BinaryTree tree_from_dyck(const DyckPath& path);

/// Number of left edges between the root and the node.
int diagonal_depth(const BinaryTree& tree, std::string_view address);

/// One vertex visit of the counterclockwise walk around a tree.
struct TraversalVisit {
  int node = 0;
  int ordinal = 1;           ///< 1 for the first visit of `node`, 2 for the second, ...
  std::size_t position = 0;  ///< steps of dyck_from_tree(tree) already taken at this visit
};

/// Counterclockwise walk from the root using every edge twice. A node is
/// visited on arrival, again after each child excursion, and a leaf is visited
/// twice in a row; two-child nodes therefore appear three times, the others
/// twice. Throws on the empty tree.
std::vector<TraversalVisit> traversal(const BinaryTree& tree);
std::vector<NodeAddress> traversal_addresses(const BinaryTree& tree);

/// Checks the height/traversal relations against dyck_from_tree(tree):
///  - all visits of a node sit at the same path height;
///  - a node's first visit and its right child's first visit share a height;
///  - interior returns to height 0 are exactly the first visits of the
///    root's right-spine descendants;
///  - the height at a node's first visit equals its diagonal depth.
bool check_traversal_heights(const BinaryTree& tree);

/// Tree test for ascending k-Naples parking functions, on the tree of the
/// embedded Dyck path (n + k nodes): whenever a node of diagonal depth k-1 is
/// visited for the second time (the path steps from height k to k-1), one of
/// the 2k-1 visits after the next one must be at a node of diagonal depth k.
/// Only visits that carry a path step count (a node's U and D steps, in path
/// order); crossings among the final k+1 D steps are exempt.
bool ascending_tree_criterion(const BinaryTree& tree, int k);

/// The root has k-1 consecutive left descendants and a right child, which in
/// turn has k consecutive left descendants; the tree has n + k nodes. Always
/// false for k = 0.
bool is_strict_descending_tree(const BinaryTree& tree, int n, int k);

/// The 2k+2 (possibly empty) subtrees hanging off the mandatory spine, listed
/// left to right in symmetric order.
std::vector<BinaryTree> strict_tree_slots(const BinaryTree& tree, int k);
/// Reattaches 2k+2 slot subtrees to a fresh spine.
BinaryTree strict_tree_from_slots(const std::vector<BinaryTree>& slots, int k);

/// Descending strictly k-Naples preference -> tree of its reflected embedded
/// Dyck path, and back.
BinaryTree strict_tree_from_descending(const Preference& pref, int k);
Preference descending_from_strict_tree(const BinaryTree& tree, int k);

// Tree text: TREE := "∅" | "(" TREE TREE ")", left subtree first. "." is
// accepted on input as an ASCII spelling of "∅".
BinaryTree parse_tree(std::string_view text);
std::string to_string(const BinaryTree& tree);

/// All binary trees with exactly `nodes` nodes, in a fixed deterministic order.
std::vector<BinaryTree> all_binary_trees(int nodes);

}  // namespace naples
