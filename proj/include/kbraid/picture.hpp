#pragma once

// Strand diagrams of free k-braids: generator crossings as solid dots, other
// crossings of the planar drawing as circled artifacts.

#include <string>
#include <vector>

#include "kbraid/group.hpp"
#include "kbraid/reduce.hpp"

namespace kbraid {

struct DiagramPoint {
  double x = 0;
  double y = 0;

  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

enum class CrossingKind { generator, artifact };

struct Crossing {
  DiagramPoint position;
  // The generator's strands, or the two strands of an artifact.
  Multiindex strands;
  CrossingKind kind = CrossingKind::generator;
  std::size_t band = 0;
};

// Strand i runs from (i, 0) to (i, 1) with increasing second coordinate.
struct Diagram {
  Signature signature;
  std::vector<std::vector<DiagramPoint>> strands;  // strands[i - 1]
  std::vector<Crossing> crossings;                 // by band, generator first

  std::size_t count(CrossingKind kind) const;
};

// Letter j fills the band [j / L, (j + 1) / L]. Its strands bend in straight
// legs to a common point at mid-band, above the mean of their indices, or half
// a column to the right when an uninvolved strand runs there.
Diagram layout(const Word& word);

// SVG 1.1: one path per strand, then filled circles (class "generator") and
// open circles (class "artifact"). Byte-stable for a given diagram.
std::string render_svg(const Diagram& diagram);

// Graphviz graph of canonical_form(word): one vertex per letter, one edge per
// pair of consecutive letters along a strand. Needs k = 2.
std::string render_minimal_graph(const Word& word, const ReduceOptions& options = {});

}  // namespace kbraid
