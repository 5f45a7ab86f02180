#pragma once

#include <string>

#include "forestf/diagram.hpp"

namespace forestf {

// Two-panel ASCII art: top forest above the bottom forest, leaves
// column-aligned, the pointer tree's leftmost leaf marked '*'. Top carets are
// drawn as /-\ spans above the top leaf row, bottom carets as \-/ spans below
// the bottom leaf row, outermost farthest from the leaves.
std::string render_ascii(const ForestDiagram& f);

// DOT digraph of one diagram: top and bottom forests as clusters, carets
// pointing at their children, pointer roots double-circled.
std::string render_dot(const ForestDiagram& f);

}  // namespace forestf
