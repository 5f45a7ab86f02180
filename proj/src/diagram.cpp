#include "forestf/diagram.hpp"

#include <algorithm>
#include <cassert>

#include "forestf/errors.hpp"
#include "forestf/word.hpp"

namespace forestf {

namespace {

void pad_left(ForestDiagram& d) {
  d.top.trees.insert(d.top.trees.begin(), Tree::leaf());
  d.bottom.trees.insert(d.bottom.trees.begin(), Tree::leaf());
  ++d.top.pointer;
  ++d.bottom.pointer;
}

void pad_right(ForestDiagram& d) {
  d.top.trees.push_back(Tree::leaf());
  d.bottom.trees.push_back(Tree::leaf());
}

// Exposed-caret starting columns of a whole forest, ascending.
void collect_exposed(const Tree& t, int base, std::vector<int>& out) {
  if (t.is_leaf()) return;
  if (t.left().is_leaf() && t.right().is_leaf()) {
    out.push_back(base);
    return;
  }
  collect_exposed(t.left(), base, out);
  collect_exposed(t.right(), base + t.left().leaf_count(), out);
}

std::vector<int> exposed_columns(const Forest& f) {
  std::vector<int> out;
  int col = 0;
  for (const Tree& t : f.trees) {
    collect_exposed(t, col, out);
    col += t.leaf_count();
  }
  return out;
}

void check_well_formed(const ForestDiagram& d) {
  if (d.top.trees.empty() || d.bottom.trees.empty())
    throw PreconditionError("diagram must have at least one column");
  if (d.top.total_leaves() != d.bottom.total_leaves())
    throw PreconditionError("top and bottom forests have unequal leaf counts");
  if (d.top.pointer < 0 || d.top.pointer >= d.top.tree_count() ||
      d.bottom.pointer < 0 || d.bottom.pointer >= d.bottom.tree_count())
    throw PreconditionError("pointer outside the stored window");
}

// Joins top trees j and j+1 under a caret, cancelling an opposing bottom
// caret instead when one exists. Shared by x1 and the direct x_n action.
void join_top_trees(ForestDiagram& f, int j) {
  while (f.top.tree_count() <= j + 1) pad_right(f);
  const Tree a = f.top.trees[j];
  const Tree b = f.top.trees[j + 1];
  if (a.is_leaf() && b.is_leaf()) {
    int col = f.top.leaf_start(j);
    Forest::Location loc = f.bottom.locate_column(col);
    if (has_exposed_caret_at(f.bottom.trees[loc.tree], loc.leaf)) {
      // The new caret would oppose this bottom caret; both are deleted and
      // the two columns merge.
      f.bottom.trees[loc.tree] = remove_exposed_caret(f.bottom.trees[loc.tree], loc.leaf);
      f.top.trees.erase(f.top.trees.begin() + j + 1);
      if (f.top.pointer > j) f.top.pointer = std::max(j, f.top.pointer - 1);
      trim_to_support(f);
      return;
    }
  }
  f.top.trees[j] = Tree::caret(a, b);
  f.top.trees.erase(f.top.trees.begin() + j + 1);
  if (f.top.pointer > j) f.top.pointer = std::max(j, f.top.pointer - 1);
  trim_to_support(f);
}

}  // namespace

bool operator==(const ForestDiagram& a, const ForestDiagram& b) {
  return a.top == b.top && a.bottom == b.bottom;
}

Gen inverse(Gen g) {
  switch (g) {
    case Gen::x0: return Gen::x0_inv;
    case Gen::x0_inv: return Gen::x0;
    case Gen::x1: return Gen::x1_inv;
    case Gen::x1_inv: return Gen::x1;
  }
  return Gen::x0;
}

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::x0: return "x0";
    case Gen::x0_inv: return "x0^-1";
    case Gen::x1: return "x1";
    case Gen::x1_inv: return "x1^-1";
  }
  return "";
}

ForestDiagram identity() {
  ForestDiagram d;
  d.top.trees = {Tree::leaf()};
  d.bottom.trees = {Tree::leaf()};
  return d;
}

void trim_to_support(ForestDiagram& d) {
  while (d.top.pointer > 0 && d.bottom.pointer > 0 &&
         d.top.trees.front().is_leaf() && d.bottom.trees.front().is_leaf()) {
    d.top.trees.erase(d.top.trees.begin());
    d.bottom.trees.erase(d.bottom.trees.begin());
    --d.top.pointer;
    --d.bottom.pointer;
  }
  while (d.top.pointer + 1 < d.top.tree_count() &&
         d.bottom.pointer + 1 < d.bottom.tree_count() &&
         d.top.trees.back().is_leaf() && d.bottom.trees.back().is_leaf()) {
    d.top.trees.pop_back();
    d.bottom.trees.pop_back();
  }
}

ForestDiagram reduce(ForestDiagram d) {
  check_well_formed(d);
  for (;;) {
    std::vector<int> top = exposed_columns(d.top);
    std::vector<int> bottom = exposed_columns(d.bottom);
    std::vector<int> common;
    std::set_intersection(top.begin(), top.end(), bottom.begin(), bottom.end(),
                          std::back_inserter(common));
    if (common.empty()) break;
    int col = common.front();
    Forest::Location lt = d.top.locate_column(col);
    d.top.trees[lt.tree] = remove_exposed_caret(d.top.trees[lt.tree], lt.leaf);
    Forest::Location lb = d.bottom.locate_column(col);
    d.bottom.trees[lb.tree] = remove_exposed_caret(d.bottom.trees[lb.tree], lb.leaf);
  }
  trim_to_support(d);
  return d;
}

bool is_reduced(const ForestDiagram& d) {
  std::vector<int> top = exposed_columns(d.top);
  std::vector<int> bottom = exposed_columns(d.bottom);
  std::vector<int> common;
  std::set_intersection(top.begin(), top.end(), bottom.begin(), bottom.end(),
                        std::back_inserter(common));
  if (!common.empty()) return false;
  ForestDiagram copy = d;
  trim_to_support(copy);
  return copy == d;
}

ForestDiagram apply_generator(Gen g, const ForestDiagram& f0) {
  ForestDiagram f = f0;
  switch (g) {
    case Gen::x0:
      if (f.top.pointer + 1 == f.top.tree_count()) pad_right(f);
      ++f.top.pointer;
      trim_to_support(f);
      break;
    case Gen::x0_inv:
      if (f.top.pointer == 0) pad_left(f);
      --f.top.pointer;
      trim_to_support(f);
      break;
    case Gen::x1:
      join_top_trees(f, f.top.pointer);
      break;
    case Gen::x1_inv: {
      int p = f.top.pointer;
      Tree t = f.top.trees[p];
      if (!t.is_leaf()) {
        // The negative caret cancels the root caret; pointer lands on the
        // left child.
        f.top.trees[p] = t.left();
        f.top.trees.insert(f.top.trees.begin() + p + 1, t.right());
        trim_to_support(f);
      } else {
        // The caret falls through to the bottom leaf under the pointer,
        // opening a new column immediately to the right of it.
        int col = f.top.leaf_start(p);
        f.top.trees.insert(f.top.trees.begin() + p + 1, Tree::leaf());
        Forest::Location loc = f.bottom.locate_column(col);
        f.bottom.trees[loc.tree] = insert_caret_at_leaf(f.bottom.trees[loc.tree], loc.leaf);
        trim_to_support(f);
      }
      break;
    }
  }
  return f;
}

ForestDiagram apply_xn(int index, int sign, const ForestDiagram& f) {
  if (index < 0) throw PreconditionError("generator index must be nonnegative");
  if (sign != 1 && sign != -1) throw PreconditionError("sign must be +1 or -1");
  if (index == 0) return apply_generator(sign == 1 ? Gen::x0 : Gen::x0_inv, f);
  if (index == 1 && sign == -1) return apply_generator(Gen::x1_inv, f);
  if (sign == 1) {
    ForestDiagram g = f;
    join_top_trees(g, g.top.pointer + index - 1);
    return g;
  }
  // x_n^-1 = x0^(1-n) x1^-1 x0^(n-1), applied right to left.
  ForestDiagram g = f;
  for (int i = 0; i < index - 1; ++i) g = apply_generator(Gen::x0, g);
  g = apply_generator(Gen::x1_inv, g);
  for (int i = 0; i < index - 1; ++i) g = apply_generator(Gen::x0_inv, g);
  return g;
}

ForestDiagram multiply(const ForestDiagram& f, const ForestDiagram& g) {
  Word w = normal_form(f);
  ForestDiagram acc = g;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    acc = apply_xn(it->index, it->sign, acc);
  return acc;
}

ForestDiagram invert(ForestDiagram f) {
  std::swap(f.top, f.bottom);
  return f;
}

bool equals(const ForestDiagram& f, const ForestDiagram& g) {
  return reduce(f) == reduce(g);
}

bool is_positive(const ForestDiagram& f) {
  return f.bottom.all_trivial() && f.bottom.pointer == 0;
}

bool is_strongly_positive(const ForestDiagram& f) {
  return is_positive(f) && f.top.pointer == 0;
}

std::pair<ForestDiagram, ForestDiagram> positive_negative_split(const ForestDiagram& f) {
  int cols = f.columns();
  ForestDiagram pos;
  pos.top = f.top;
  pos.bottom.trees.assign(cols, Tree::leaf());
  pos.bottom.pointer = 0;
  trim_to_support(pos);

  ForestDiagram neg;
  neg.bottom = f.bottom;
  neg.top.trees.assign(cols, Tree::leaf());
  neg.top.pointer = 0;
  trim_to_support(neg);
  return {pos, neg};
}

bool operator==(const TreeDiagramPair& a, const TreeDiagramPair& b) {
  return a.top_tree == b.top_tree && a.bottom_tree == b.bottom_tree;
}

namespace {

Tree left_vine(const std::vector<Tree>& trees, int count) {
  Tree acc = Tree::leaf();  // leading tail leaf
  for (int i = 0; i < count; ++i) acc = Tree::caret(acc, trees[i]);
  return acc;
}

Tree right_vine(const std::vector<Tree>& trees, int from) {
  Tree acc = Tree::leaf();  // trailing tail leaf
  for (int i = static_cast<int>(trees.size()) - 1; i >= from; --i)
    acc = Tree::caret(trees[i], acc);
  return acc;
}

Tree wrap_forest(const Forest& f) {
  return Tree::caret(left_vine(f.trees, f.pointer), right_vine(f.trees, f.pointer));
}

std::vector<int> exposed_leaf_indices(const Tree& t) {
  std::vector<int> out;
  collect_exposed(t, 0, out);
  return out;
}

void reduce_pair(TreeDiagramPair& p) {
  // Stops at the minimal matched pair: the identity keeps one caret per tree
  // rather than degenerating to bare leaves.
  while (p.top_tree.leaf_count() > 2) {
    std::vector<int> top = exposed_leaf_indices(p.top_tree);
    std::vector<int> bottom = exposed_leaf_indices(p.bottom_tree);
    std::vector<int> common;
    std::set_intersection(top.begin(), top.end(), bottom.begin(), bottom.end(),
                          std::back_inserter(common));
    if (common.empty()) return;
    p.top_tree = remove_exposed_caret(p.top_tree, common.front());
    p.bottom_tree = remove_exposed_caret(p.bottom_tree, common.front());
  }
}

// Splits caret(left vine, right vine) back into a forest with pointer.
// Pre: the right vine is nontrivial (it carries the pointer tree).
Forest peel_vines(const Tree& t) {
  Forest f;
  std::vector<Tree> left;
  for (Tree cur = t.left(); !cur.is_leaf(); cur = cur.left()) left.push_back(cur.right());
  std::reverse(left.begin(), left.end());
  f.trees = std::move(left);
  f.pointer = f.tree_count();
  for (Tree cur = t.right(); !cur.is_leaf(); cur = cur.right()) f.trees.push_back(cur.left());
  return f;
}

}  // namespace

TreeDiagramPair to_tree_diagram(const ForestDiagram& f) {
  TreeDiagramPair p{wrap_forest(f.top), wrap_forest(f.bottom)};
  reduce_pair(p);
  return p;
}

ForestDiagram from_tree_diagram(TreeDiagramPair p) {
  if (p.top_tree.leaf_count() != p.bottom_tree.leaf_count())
    throw PreconditionError("tree diagram has unequal leaf counts");
  // Restore the vine frame: the roots must be carets and each right vine
  // must hold at least the pointer tree. Expansions insert opposing carets,
  // so the element is unchanged.
  if (p.top_tree.is_leaf()) {
    p.top_tree = insert_caret_at_leaf(p.top_tree, 0);
    p.bottom_tree = insert_caret_at_leaf(p.bottom_tree, 0);
  }
  if (p.top_tree.right().is_leaf() || p.bottom_tree.right().is_leaf()) {
    int last = p.top_tree.leaf_count() - 1;
    p.top_tree = insert_caret_at_leaf(p.top_tree, last);
    p.bottom_tree = insert_caret_at_leaf(p.bottom_tree, last);
  }
  ForestDiagram d;
  d.top = peel_vines(p.top_tree);
  d.bottom = peel_vines(p.bottom_tree);
  return reduce(std::move(d));
}

std::string serialize(const Tree& t) {
  if (t.is_leaf()) return ".";
  return "(" + serialize(t.left()) + serialize(t.right()) + ")";
}

std::string serialize(const Forest& f) {
  std::string out;
  for (int i = 0; i < f.tree_count(); ++i) {
    if (i > 0) out += ' ';
    if (i == f.pointer) out += '*';
    out += serialize(f.trees[i]);
  }
  return out;
}

std::string serialize(const ForestDiagram& d) {
  return serialize(d.top) + "\n" + serialize(d.bottom);
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos); }
};

Tree parse_tree(Cursor& c) {
  if (c.done()) c.fail("expected a tree");
  char ch = c.peek();
  if (ch == '.') {
    ++c.pos;
    return Tree::leaf();
  }
  if (ch == '(') {
    ++c.pos;
    Tree left = parse_tree(c);
    Tree right = parse_tree(c);
    if (c.done() || c.peek() != ')') c.fail("expected ')'");
    ++c.pos;
    return Tree::caret(left, right);
  }
  c.fail("expected '.' or '('");
}

Forest parse_forest(Cursor& c, std::size_t line_end) {
  Forest f;
  int pointer = -1;
  for (;;) {
    if (c.pos >= line_end) c.fail("expected a tree");
    if (c.peek() == '*') {
      if (pointer >= 0) c.fail("duplicate pointer mark");
      pointer = f.tree_count();
      ++c.pos;
    }
    f.trees.push_back(parse_tree(c));
    if (c.pos == line_end) break;
    if (c.peek() != ' ') c.fail("expected a single space between trees");
    ++c.pos;
  }
  if (pointer < 0) c.fail("forest line has no pointer mark");
  f.pointer = pointer;
  return f;
}

}  // namespace

ForestDiagram parse_diagram(std::string_view text) {
  std::size_t newline = text.find('\n');
  if (newline == std::string_view::npos)
    throw ParseError("diagram needs a top line and a bottom line", text.size());
  if (text.find('\n', newline + 1) != std::string_view::npos)
    throw ParseError("diagram has more than two lines", text.find('\n', newline + 1));

  Cursor c{text, 0};
  ForestDiagram d;
  d.top = parse_forest(c, newline);
  c.pos = newline + 1;
  d.bottom = parse_forest(c, text.size());
  if (d.top.total_leaves() != d.bottom.total_leaves())
    throw ParseError("top and bottom forests have unequal leaf counts", 0);
  return d;
}

}  // namespace forestf
