#pragma once

#include <string>

#include "naples/paths.hpp"
#include "naples/trees.hpp"

namespace naples {

/// Staircase drawing with '/' for U and '\' for D, one row per height level,
/// highest level first. Rows end with '\n'; the empty word renders as "".
std::string render_path_ascii(const StepWord& word);
/// Standalone SVG with one polyline through the lattice points.
std::string render_path_svg(const StepWord& word, int unit = 20);

/// One line per node in preorder, indented by depth: "*" for the root, then
/// "L"/"R" for the edge taken, followed by the diagonal depth.
std::string render_tree_ascii(const BinaryTree& tree);
/// DOT digraph; nodes are named by preorder index, edges labelled L/R.
std::string render_tree_dot(const BinaryTree& tree);
/// Standalone SVG of nested boxes, one box per subtree, laid out in symmetric order.
std::string render_tree_svg(const BinaryTree& tree, int unit = 20);

}  // namespace naples
