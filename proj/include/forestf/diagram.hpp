#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "forestf/forest.hpp"

namespace forestf {

// A forest diagram: top (range) forest over bottom (domain) forest, stored
// over one shared window of columns in which leaves are vertically aligned.
// The k-th bottom leaf maps to the k-th top leaf. All operations expect and
// return canonical diagrams: reduced, with the window trimmed to the support.
struct ForestDiagram {
  Forest top;
  Forest bottom;

  int columns() const { return top.total_leaves(); }
};

bool operator==(const ForestDiagram& a, const ForestDiagram& b);
inline bool operator!=(const ForestDiagram& a, const ForestDiagram& b) { return !(a == b); }

enum class Gen { x0, x0_inv, x1, x1_inv };

Gen inverse(Gen g);
const char* gen_name(Gen g);

ForestDiagram identity();

// Trims/pads the window so it equals the support. Exposed for tests; every
// operation already returns canonical diagrams.
void trim_to_support(ForestDiagram& d);

// Unique reduced diagram of the same element. Accepts any well-formed
// diagram; rejects unequal leaf counts.
ForestDiagram reduce(ForestDiagram d);

// True iff d carries no opposing caret pair and its window equals its support.
bool is_reduced(const ForestDiagram& d);

// Left multiplication by a generator. Input must be reduced; the result is.
ForestDiagram apply_generator(Gen g, const ForestDiagram& f);

// Left multiplication by x_n^(sign), n >= 0. For n >= 1 and sign = +1 this
// attaches a caret to the roots of the (n-1)- and n-trees of the top forest.
ForestDiagram apply_xn(int index, int sign, const ForestDiagram& f);

ForestDiagram multiply(const ForestDiagram& f, const ForestDiagram& g);
ForestDiagram invert(ForestDiagram f);

// Equality as group elements (reduces both sides first).
bool equals(const ForestDiagram& f, const ForestDiagram& g);

// Element of the submonoid generated by {x0, x1, x2, ...}: trivial bottom
// forest with the bottom pointer at the left end of the support.
bool is_positive(const ForestDiagram& f);

// Element of the submonoid generated by {x1, x2, ...}: positive with the top
// pointer also at the left end of the support.
bool is_strongly_positive(const ForestDiagram& f);

// Splits f into (pos, neg) with multiply(pos, neg) == f, pos positive and
// invert(neg) positive. pos keeps f's top forest, neg keeps f's bottom.
std::pair<ForestDiagram, ForestDiagram> positive_negative_split(const ForestDiagram& f);

struct TreeDiagramPair {
  Tree top_tree;
  Tree bottom_tree;
};

bool operator==(const TreeDiagramPair& a, const TreeDiagramPair& b);

// Vine wrapping: each forest becomes caret(left vine, right vine), then the
// pair is reduced. Inverse of from_tree_diagram.
TreeDiagramPair to_tree_diagram(const ForestDiagram& f);
ForestDiagram from_tree_diagram(TreeDiagramPair p);

// Canonical text form. Tree: "." or "(" tree tree ")". Forest: trees joined
// by single spaces, the pointer tree prefixed by "*". Diagram: top line,
// newline, bottom line. Example: the identity is "*.\n*.".
std::string serialize(const Tree& t);
std::string serialize(const Forest& f);
std::string serialize(const ForestDiagram& d);

// Strict inverse of serialize: single-space separators, exactly one pointer
// per line, equal leaf counts. Throws ParseError.
ForestDiagram parse_diagram(std::string_view text);

}  // namespace forestf
