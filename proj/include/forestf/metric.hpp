#pragma once

#include <array>
#include <string>
#include <utility>

#include "forestf/diagram.hpp"
#include "forestf/word.hpp"

namespace forestf {

// Per-side space labels: L (exterior, at or left of the pointer),
// N (immediately left of a caret), R (exterior, right of the pointer),
// I (interior). Priority per side: L, then N, then R/I.
enum class SpaceLabel : unsigned char { L = 0, N = 1, R = 2, I = 3 };

char label_char(SpaceLabel l);

struct LabeledSpace {
  SpaceLabel top;
  SpaceLabel bottom;
};

// One entry per gap between consecutive columns of the support.
using Labeling = std::vector<LabeledSpace>;

Labeling label_spaces(const ForestDiagram& f);

// weights[top][bottom].
using WeightTable = std::array<std::array<int, 4>, 4>;

const WeightTable& default_weight_table();

int weight(SpaceLabel top, SpaceLabel bottom);

struct LengthBreakdown {
  int ell0 = 0;  // sum of space weights over the support
  int ell1 = 0;  // total carets, top plus bottom
  int total() const { return ell0 + ell1; }
};

// The {x0,x1} word length of f.
LengthBreakdown length(const ForestDiagram& f);

// Same, with a custom weight table (test seam for negative controls).
LengthBreakdown length_with_table(const ForestDiagram& f, const WeightTable& table);

// For strongly positive f: n = spaces that are exterior or immediately left
// of a caret in the top forest, c = caret count; 2n + c is the length.
std::pair<int, int> strongly_positive_length_stats(const ForestDiagram& f);

// length(s.f) - length(f), from the case analysis on f's labeling alone.
// Always +1 or -1.
int predict_delta(Gen s, const ForestDiagram& f);

// A word of length exactly length(f).total() evaluating to f, in which every
// x1 creates a top caret and every x1^-1 creates a bottom caret. Greedy
// descent with the fixed tie order x1 (cancel only), x1^-1 (nontrivial
// current tree only), x0, x0^-1.
Word minimum_length_word(const ForestDiagram& f);

// All four generator neighbors are strictly shorter. Rejects the identity.
bool is_dead_end(const ForestDiagram& f);

// length(x1^-1 x1^-1 x0 . f), which always equals length(f) + 1. Rejects
// non-dead-ends.
int dead_end_escape_length(const ForestDiagram& f);

// One line per gap: "gapIndex: top=<L|N|R|I> bottom=<L|N|R|I> weight=<0|1|2>".
std::string format_labeling(const ForestDiagram& f);

}  // namespace forestf
