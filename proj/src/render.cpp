#include "naples/render.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace naples {

std::string render_path_ascii(const StepWord& word) {
  if (word.empty()) return "";
  const auto h = word.heights();
  const int top = *std::max_element(h.begin(), h.end());
  const int bottom = *std::min_element(h.begin(), h.end());
  std::string out;
  // A U step from height y occupies row y, a D step from y occupies row y-1.
  for (int row = top - 1; row >= bottom; --row) {
    std::string line(word.size(), ' ');
    for (std::size_t t = 0; t < word.size(); ++t) {
      if (word[t] == Step::Up && h[t] == row) line[t] = '/';
      if (word[t] == Step::Down && h[t] - 1 == row) line[t] = '\\';
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

std::string render_path_svg(const StepWord& word, int unit) {
  const auto h = word.heights();
  const int top = *std::max_element(h.begin(), h.end());
  const int bottom = *std::min_element(h.begin(), h.end());
  const int width = static_cast<int>(word.size()) * unit + 2 * unit;
  const int height = (top - bottom) * unit + 2 * unit;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  svg << "  <line x1=\"" << unit << "\" y1=\"" << (top + 1) * unit << "\" x2=\"" << width - unit << "\" y2=\""
      << (top + 1) * unit << "\" stroke=\"#999\"/>\n";
  svg << "  <polyline fill=\"none\" stroke=\"black\" points=\"";
  for (std::size_t t = 0; t < h.size(); ++t) {
    if (t) svg << ' ';
    svg << (static_cast<int>(t) + 1) * unit << ',' << (top - h[t] + 1) * unit;
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

std::string render_tree_ascii(const BinaryTree& tree) {
  if (tree.empty()) return "∅\n";
  std::string out;
  std::function<void(int, int, char, int)> visit = [&](int node, int depth, char edge, int diagonal) {
    out += std::string(2 * depth, ' ') + edge + " " + std::to_string(diagonal) + '\n';
    if (tree.has_left(node)) visit(tree.left(node), depth + 1, 'L', diagonal + 1);
    if (tree.has_right(node)) visit(tree.right(node), depth + 1, 'R', diagonal);
  };
  visit(tree.root(), 0, '*', 0);
  return out;
}

std::string render_tree_dot(const BinaryTree& tree) {
  std::ostringstream dot;
  dot << "digraph tree {\n";
  for (int i = 0; i < static_cast<int>(tree.size()); ++i) {
    dot << "  n" << i << ";\n";
    if (tree.has_left(i)) dot << "  n" << i << " -> n" << tree.left(i) << " [label=L];\n";
    if (tree.has_right(i)) dot << "  n" << i << " -> n" << tree.right(i) << " [label=R];\n";
  }
  dot << "}\n";
  return dot.str();
}

std::string render_tree_svg(const BinaryTree& tree, int unit) {
  constexpr int gap = 3;  // inset of a box inside its parent
  std::function<int(int)> depth_below = [&](int node) -> int {
    if (node == BinaryTree::npos) return 0;
    return 1 + std::max(depth_below(tree.left(node)), depth_below(tree.right(node)));
  };
  const int levels = tree.empty() ? 0 : depth_below(tree.root());
  unit = std::max(unit, 2 * levels * gap + 2 * gap);  // keeps the innermost boxes visible
  const int height = unit + 2 * levels * gap;
  std::ostringstream rects;
  // Returns the number of nodes placed; `first` is the symmetric-order slot of
  // the leftmost node of the subtree.
  std::function<int(int, int, int)> place = [&](int node, int first, int depth) -> int {
    if (node == BinaryTree::npos) return 0;
    const int left = place(tree.left(node), first, depth + 1);
    const int right = place(tree.right(node), first + left + 1, depth + 1);
    const int count = left + right + 1;
    rects << "  <rect x=\"" << first * unit + depth * gap << "\" y=\"" << depth * gap << "\" width=\""
          << count * unit - 2 * depth * gap << "\" height=\"" << height - 2 * depth * gap
          << "\" fill=\"none\" stroke=\"black\"/>\n";
    return count;
  };
  const int nodes = tree.empty() ? 0 : place(tree.root(), 0, 0);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << std::max(nodes, 1) * unit << "\" height=\"" << height
      << "\">\n"
      << rects.str() << "</svg>\n";
  return svg.str();
}

}  // namespace naples
