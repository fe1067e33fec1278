#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "kbraid/picture.hpp"
#include "kbraid/word_io.hpp"

using namespace kbraid;

namespace {

Word w(const char* text, int n, int k) { return parse_word(text, make_signature(n, k)); }

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
  return count;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("layout structure") {
  const Diagram empty = layout(w("e", 3, 2));
  CHECK(empty.crossings.empty());
  for (int i = 1; i <= 3; ++i) {
    CHECK(empty.strands[static_cast<std::size_t>(i - 1)] == std::vector<DiagramPoint>{{double(i), 0}, {double(i), 1}});
  }

  const Diagram one = layout(w("(1 2)", 2, 2));
  CHECK(one.count(CrossingKind::generator) == 1);
  CHECK(one.count(CrossingKind::artifact) == 0);

  // Strand 1 reaches the meeting point at x = 2.5 over strand 2.
  const Diagram hop = layout(w("(1 3)", 3, 2));
  CHECK(hop.crossings.front().position == DiagramPoint{2.5, 0.5});
  CHECK(hop.count(CrossingKind::artifact) == 2);

  const Diagram fig = layout(w("(2 3 4) (1 2 3)", 4, 3));
  CHECK(fig.count(CrossingKind::generator) == 2);
  CHECK(fig.crossings[0].strands.to_string() == "(2 3 4)");
  for (const auto& strand : fig.strands) {
    CHECK(strand.front().y == 0);
    CHECK(strand.back().y == 1);
    for (std::size_t p = 1; p < strand.size(); ++p) CHECK(strand[p - 1].y < strand[p].y);
    CHECK(strand.front().x == strand.back().x);
  }
}

TEST_CASE("every letter yields one solid dot") {
  for (const char* text : {"(1 2) (2 3) (1 3) (1 4)", "(1 4) (1 4) (2 3)", "(1 2) (3 4) (1 4) (2 4) (1 3)"}) {
    const Word word = w(text, 4, 2);
    const Diagram d = layout(word);
    CHECK(d.count(CrossingKind::generator) == word.size());
    const std::string svg = render_svg(d);
    CHECK(occurrences(svg, "class=\"generator\"") == word.size());
    CHECK(occurrences(svg, "class=\"artifact\"") == d.count(CrossingKind::artifact));
  }
}

TEST_CASE("svg output") {
  const std::string empty = render_svg(layout(w("e", 3, 2)));
  CHECK(occurrences(empty, "<path") == 3);
  CHECK(occurrences(empty, "<circle") == 0);
  CHECK(empty.rfind("<?xml", 0) == 0);
  CHECK(occurrences(empty, "<svg") == 1);
  CHECK(occurrences(empty, "</svg>") == 1);

  const std::string one = render_svg(layout(w("(1 2)", 2, 2)));
  CHECK(occurrences(one, "fill=\"black\"") == 1);

  const std::string fig = render_svg(layout(w("(2 3 4) (1 2 3)", 4, 3)));
  CHECK(occurrences(fig, "class=\"generator\"") == 2);
  CHECK(fig == render_svg(layout(w("(2 3 4) (1 2 3)", 4, 3))));
  CHECK(fig == read_file(std::string(KBRAID_GOLDEN_DIR) + "/two_generators.svg"));
}

TEST_CASE("minimal graphs") {
  CHECK(render_minimal_graph(w("(1 2) (1 3) (2 3) (1 2) (1 3) (2 3)", 3, 2)) == "graph minimal {\n}\n");
  CHECK(render_minimal_graph(w("(1 2)", 3, 2)) == "graph minimal {\n  v0 [label=\"(1 2)\"];\n}\n");
  const std::string two = render_minimal_graph(w("(1 2) (1 3)", 3, 2));
  CHECK(occurrences(two, "[label=\"(") == 2);
  CHECK(occurrences(two, " -- ") == 1);
  CHECK(two.find("v0 -- v1 [label=\"1\"]") != std::string::npos);
  // Equal words give identical graphs.
  CHECK(render_minimal_graph(w("(1 2) (3 4) (1 3)", 4, 2)) == render_minimal_graph(w("(3 4) (1 2) (1 3)", 4, 2)));
  CHECK(render_minimal_graph(w("(1 2) (1 3) (2 3)", 3, 2)) == render_minimal_graph(w("(2 3) (1 3) (1 2)", 3, 2)));
  CHECK_THROWS_AS(render_minimal_graph(w("(1 2 3)", 4, 3)), Error);
}
