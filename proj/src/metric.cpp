#include "forestf/metric.hpp"

#include <cassert>
#include <stdexcept>

#include "forestf/errors.hpp"

namespace forestf {

char label_char(SpaceLabel l) {
  switch (l) {
    case SpaceLabel::L: return 'L';
    case SpaceLabel::N: return 'N';
    case SpaceLabel::R: return 'R';
    case SpaceLabel::I: return 'I';
  }
  return '?';
}

namespace {

std::vector<SpaceLabel> side_labels(const Forest& f, int columns) {
  std::vector<SpaceLabel> labels;
  labels.reserve(columns > 0 ? columns - 1 : 0);

  // tree index and local leaf index per column
  std::vector<int> tree_of(columns), leaf_of(columns);
  int col = 0;
  for (int i = 0; i < f.tree_count(); ++i) {
    for (int l = 0; l < f.trees[i].leaf_count(); ++l, ++col) {
      tree_of[col] = i;
      leaf_of[col] = l;
    }
  }

  for (int g = 0; g + 1 < columns; ++g) {
    int right_tree = tree_of[g + 1];
    bool exterior = tree_of[g] != right_tree;
    if (exterior && right_tree <= f.pointer) {
      labels.push_back(SpaceLabel::L);
      continue;
    }
    if (leaf_is_left_child(f.trees[right_tree], leaf_of[g + 1])) {
      labels.push_back(SpaceLabel::N);
      continue;
    }
    labels.push_back(exterior ? SpaceLabel::R : SpaceLabel::I);
  }
  return labels;
}

int caret_total(const ForestDiagram& f) {
  int total = 0;
  for (const Tree& t : f.top.trees) total += t.caret_count();
  for (const Tree& t : f.bottom.trees) total += t.caret_count();
  return total;
}

// Gap index immediately right of the top pointer tree, or -1 when the
// pointer tree is the last tree of the window.
int right_space(const ForestDiagram& f) {
  int p = f.top.pointer;
  if (p + 1 == f.top.tree_count()) return -1;
  return f.top.leaf_start(p) + f.top.trees[p].leaf_count() - 1;
}

// Gap index immediately left of the top pointer tree, or -1 when the pointer
// tree is the first tree of the window.
int left_space(const ForestDiagram& f) {
  int p = f.top.pointer;
  if (p == 0) return -1;
  return f.top.leaf_start(p) - 1;
}

// True iff left-multiplying by x1 cancels a bottom caret: the 0- and 1-trees
// of the top forest are trivial and the bottom forest carries an exposed
// caret over the same two columns.
bool x1_cancels(const ForestDiagram& f) {
  int p = f.top.pointer;
  if (!f.top.trees[p].is_leaf()) return false;
  if (p + 1 >= f.top.tree_count()) return false;  // next column is outside the support
  if (!f.top.trees[p + 1].is_leaf()) return false;
  int col = f.top.leaf_start(p);
  Forest::Location loc = f.bottom.locate_column(col);
  return has_exposed_caret_at(f.bottom.trees[loc.tree], loc.leaf);
}

}  // namespace

Labeling label_spaces(const ForestDiagram& f) {
  int columns = f.columns();
  std::vector<SpaceLabel> top = side_labels(f.top, columns);
  std::vector<SpaceLabel> bottom = side_labels(f.bottom, columns);
  Labeling out(top.size());
  for (std::size_t i = 0; i < top.size(); ++i) out[i] = {top[i], bottom[i]};
  return out;
}

const WeightTable& default_weight_table() {
  //                 bottom:  L  N  R  I
  static const WeightTable table{{{2, 1, 1, 1},    // top L
                                  {1, 2, 2, 2},    // top N
                                  {1, 2, 2, 0},    // top R
                                  {1, 2, 0, 0}}};  // top I
  return table;
}

int weight(SpaceLabel top, SpaceLabel bottom) {
  return default_weight_table()[static_cast<int>(top)][static_cast<int>(bottom)];
}

LengthBreakdown length_with_table(const ForestDiagram& f, const WeightTable& table) {
  LengthBreakdown out;
  for (const LabeledSpace& s : label_spaces(f))
    out.ell0 += table[static_cast<int>(s.top)][static_cast<int>(s.bottom)];
  out.ell1 = caret_total(f);
  return out;
}

LengthBreakdown length(const ForestDiagram& f) {
  return length_with_table(f, default_weight_table());
}

std::pair<int, int> strongly_positive_length_stats(const ForestDiagram& f) {
  if (!is_strongly_positive(f))
    throw PreconditionError("length stats require a strongly positive element");
  int columns = f.columns();
  std::vector<SpaceLabel> top = side_labels(f.top, columns);
  int n = 0;
  for (SpaceLabel l : top)
    if (l != SpaceLabel::I) ++n;  // exterior or immediately left of a caret
  return {n, caret_total(f)};
}

int predict_delta(Gen s, const ForestDiagram& f) {
  const Labeling lab = label_spaces(f);
  const Forest& top = f.top;
  const Forest& bottom = f.bottom;
  const int p = top.pointer;
  const int columns = f.columns();

  switch (s) {
    case Gen::x0: {
      int g = right_space(f);
      if (g < 0) return +1;  // support grows on the right
      // Support shrinks iff the leftmost column was held by the top pointer
      // alone.
      bool shrink = p == 0 && top.trees[0].is_leaf() && bottom.trees[0].is_leaf() &&
                    bottom.pointer != 0;
      if (shrink) return -1;
      if (lab[g].bottom == SpaceLabel::L) return +1;
      if (lab[g].top == SpaceLabel::R && lab[g].bottom == SpaceLabel::I) return +1;
      return -1;
    }
    case Gen::x0_inv: {
      bool shrink = p + 1 == top.tree_count() && top.trees[p].is_leaf() &&
                    bottom.trees.back().is_leaf() && bottom.pointer + 1 != bottom.tree_count();
      if (shrink) return -1;
      int g = left_space(f);
      if (g < 0) return +1;  // support grows on the left
      // The left space of the pointer tree always has top label L.
      if (lab[g].bottom == SpaceLabel::L) return -1;
      if (lab[g].bottom == SpaceLabel::I && top.trees[p].is_leaf()) return -1;
      return +1;
    }
    case Gen::x1: {
      if (x1_cancels(f)) return -1;
      int g = right_space(f);
      if (g < 0) return +1;  // support grows
      return lab[g].top == SpaceLabel::R && lab[g].bottom == SpaceLabel::R ? -1 : +1;
    }
    case Gen::x1_inv: {
      const Tree& t = top.trees[p];
      if (t.is_leaf()) return +1;  // the caret falls through to the bottom
      // Deleting the root caret uncovers the space between its children;
      // the length grows only when that space is (R,R) in the result.
      if (!t.right().is_leaf()) return -1;  // uncovered top label is N
      int g = top.leaf_start(p) + t.left().leaf_count() - 1;
      int end_col = top.leaf_start(p) + t.leaf_count() - 1;
      bool survives;
      if (end_col + 1 < columns) {
        survives = true;
      } else {
        // The uncovered right leaf column stays in the support only if the
        // bottom holds it.
        Forest::Location loc = bottom.locate_column(end_col);
        survives = !bottom.trees[loc.tree].is_leaf() || bottom.pointer == loc.tree;
      }
      if (!survives) return -1;
      return lab[g].bottom == SpaceLabel::R ? +1 : -1;
    }
  }
  throw std::logic_error("unhandled generator");
}

Word minimum_length_word(const ForestDiagram& f) {
  Word w;
  ForestDiagram cur = f;
  const ForestDiagram id = identity();
  int guard = length(f).total();
  while (!(cur == id)) {
    if (guard-- < 0) throw std::logic_error("descent exceeded the predicted length");
    Gen s;
    if (x1_cancels(cur)) {
      s = Gen::x1;
    } else if (!cur.top.trees[cur.top.pointer].is_leaf() &&
               predict_delta(Gen::x1_inv, cur) == -1) {
      s = Gen::x1_inv;
    } else if (predict_delta(Gen::x0, cur) == -1) {
      s = Gen::x0;
    } else if (predict_delta(Gen::x0_inv, cur) == -1) {
      s = Gen::x0_inv;
    } else {
      throw std::logic_error("no length-decreasing generator found");
    }
    switch (s) {
      case Gen::x0: w.push_back({0, -1}); break;
      case Gen::x0_inv: w.push_back({0, 1}); break;
      case Gen::x1: w.push_back({1, -1}); break;
      case Gen::x1_inv: w.push_back({1, 1}); break;
    }
    cur = apply_generator(s, cur);
  }
  return w;
}

bool is_dead_end(const ForestDiagram& f) {
  if (f == identity()) throw PreconditionError("the identity has no dead-end status");
  const Labeling lab = label_spaces(f);
  int p = f.top.pointer;
  if (f.top.trees[p].is_leaf()) return false;
  int gl = left_space(f);
  int gr = right_space(f);
  if (gl < 0 || gr < 0) return false;
  if (!(lab[gl].top == SpaceLabel::L && lab[gl].bottom == SpaceLabel::L)) return false;
  if (!(lab[gr].top == SpaceLabel::R && lab[gr].bottom == SpaceLabel::R)) return false;
  return predict_delta(Gen::x1_inv, f) == -1;
}

int dead_end_escape_length(const ForestDiagram& f) {
  if (!is_dead_end(f)) throw PreconditionError("escape length requires a dead end");
  ForestDiagram g = apply_generator(Gen::x0, f);
  g = apply_generator(Gen::x1_inv, g);
  g = apply_generator(Gen::x1_inv, g);
  int escape = length(g).total();
  if (escape != length(f).total() + 1)
    throw std::logic_error("dead-end escape length differs from length(f) + 1");
  return escape;
}

std::string format_labeling(const ForestDiagram& f) {
  std::string out;
  const Labeling lab = label_spaces(f);
  for (std::size_t g = 0; g < lab.size(); ++g) {
    out += std::to_string(g);
    out += ": top=";
    out += label_char(lab[g].top);
    out += " bottom=";
    out += label_char(lab[g].bottom);
    out += " weight=" + std::to_string(weight(lab[g].top, lab[g].bottom));
    out += '\n';
  }
  return out;
}

}  // namespace forestf
