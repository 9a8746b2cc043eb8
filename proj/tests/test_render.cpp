#include <doctest.h>

#include "naples/render.hpp"

using namespace naples;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
  return count;
}

}  // namespace

TEST_CASE("ascii paths") {
  CHECK(render_path_ascii(StepWord("UUDUDD")) == " /\\/\\\n/    \\\n");
  CHECK(render_path_ascii(StepWord("UD")) == "/\\\n");
  CHECK(render_path_ascii(StepWord("")).empty());
  // Paths below the axis get their own rows.
  CHECK(render_path_ascii(StepWord("DU")) == "\\/\n");
  CHECK(render_path_ascii(StepWord("DDUU")) == "\\  /\n \\/\n");
}

TEST_CASE("svg paths") {
  const std::string svg = render_path_svg(StepWord("UD"));
  CHECK(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
  CHECK(svg.find("points=\"20,40 40,20 60,40\"") != std::string::npos);
  CHECK(svg.ends_with("</svg>\n"));
  CHECK(occurrences(render_path_svg(StepWord("UUDUDDDU")), "<polyline") == 1);
}

TEST_CASE("ascii trees") {
  CHECK(render_tree_ascii(parse_tree("((∅∅)(∅∅))")) == "* 0\n  L 1\n  R 0\n");
  CHECK(render_tree_ascii(parse_tree("(((∅∅)∅)∅)")) == "* 0\n  L 1\n    L 2\n");
  CHECK(render_tree_ascii(BinaryTree{}) == "∅\n");
}

TEST_CASE("dot trees") {
  const std::string dot = render_tree_dot(parse_tree("((∅∅)(∅∅))"));
  CHECK(dot.starts_with("digraph tree {\n"));
  CHECK(dot.find("n0 -> n1 [label=L];") != std::string::npos);
  CHECK(dot.find("n0 -> n2 [label=R];") != std::string::npos);
  CHECK(dot.ends_with("}\n"));
  CHECK(occurrences(render_tree_dot(BinaryTree{}), "->") == 0);
}

TEST_CASE("svg trees have one box per node") {
  for (const auto& t : all_binary_trees(6)) {
    const std::string svg = render_tree_svg(t);
    REQUIRE(occurrences(svg, "<rect") == t.size());
    REQUIRE(svg.ends_with("</svg>\n"));
  }
}
