#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "naples/trees.hpp"

namespace naples {

using Diagonal = std::pair<int, int>;

/// A dissection of a convex s-gon (vertices 0..s-1 clockwise) into one r-gon
/// and s - r triangles by non-crossing diagonals.
///
/// Canonical labelling for the "up to rotation, with a distinguished edge"
/// reading: vertex 0 is a corner of the r-gon and the distinguished edge is
/// the r-gon side leaving vertex 0 clockwise. The r-gon sides, taken
/// clockwise from the distinguished one, carry the triangulated regions that
/// correspond to the strict-tree slots in order.
struct Dissection {
  int s = 0;
  int r = 0;
  std::vector<Diagonal> diagonals;  ///< (a, b) with a < b, sorted

  bool operator==(const Dissection&) const = default;
};

/// Validates the polygon: in-range non-adjacent diagonals, pairwise
/// non-crossing, exactly one r-gon face, every other face a triangle, and
/// vertex 0 on the r-gon. Throws DomainError with the first violation.
void validate(const Dissection& d);
/// Corners of the r-gon face in increasing order. Assumes a valid dissection.
std::vector<int> central_face(const Dissection& d);

/// Triangulation of the polygon with the given clockwise vertices, rooted at
/// the side (front, back); returns the chords (sides of the polygon excluded).
/// A tree with i nodes needs i + 2 vertices.
std::vector<Diagonal> triangulation_from_tree(const BinaryTree& tree, const std::vector<int>& polygon);
/// Inverse of triangulation_from_tree; `chords` may contain unrelated
/// diagonals, only those joining two polygon vertices are used.
BinaryTree tree_from_triangulation(const std::vector<int>& polygon, const std::vector<Diagonal>& chords);

/// Strict descending tree with n + k nodes -> (2k+2)-in-(n+k+1) dissection.
Dissection dissection_from_strict(const BinaryTree& tree, int n, int k);
BinaryTree strict_from_dissection(const Dissection& d, int n, int k);

/// A set partition of {1..m} with a distinguished root block.
struct RootedNcp {
  int m = 0;
  std::vector<int> root;                 ///< sorted
  std::vector<std::vector<int>> blocks;  ///< other blocks, each sorted, ordered by least element

  bool operator==(const RootedNcp&) const = default;
};

/// True when no a < b < c < d has a, c in one block and b, d in another.
/// Blocks must be disjoint (DomainError otherwise).
bool is_non_crossing(const std::vector<std::vector<int>>& blocks);

/// Validates a rooted NCP: blocks partition {1..m}, non-crossing, 1 in the
/// root. Throws DomainError otherwise.
void validate(const RootedNcp& p);

/// Non-crossing partition of {first, ..., first + size - 1} from a binary
/// tree of `size` nodes. Node = element; the root is the least element, its
/// left subtree fills the elements strictly between it and the next element
/// of its block, and its right subtree holds that next element onwards.
std::vector<std::vector<int>> ncp_from_tree(const BinaryTree& tree, int first = 1);
/// Inverse; `blocks` must partition a contiguous range starting at `first`.
BinaryTree tree_from_ncp(const std::vector<std::vector<int>>& blocks, int first = 1);

/// Strict descending tree with n + k nodes -> (2k+2)-rooted NCP of [n+k+1].
RootedNcp ncp_from_strict(const BinaryTree& tree, int n, int k);
BinaryTree strict_from_ncp(const RootedNcp& p, int n, int k);

// Text forms:
//   dissection  "s=10;r=6;diag=(0,2),(3,5)"   (empty list: "diag=")
//   rooted NCP  "root={1,2,7,8,9,10};blocks={3,4},{5},{6}"   (m = largest element)
Dissection parse_dissection(std::string_view text);
std::string to_string(const Dissection& d);
RootedNcp parse_rooted_ncp(std::string_view text);
std::string to_string(const RootedNcp& p);

}  // namespace naples
