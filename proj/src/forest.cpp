#include "forestf/forest.hpp"

#include <cassert>

namespace forestf {

int Forest::total_leaves() const {
  int total = 0;
  for (const Tree& t : trees) total += t.leaf_count();
  return total;
}

bool Forest::all_trivial() const {
  for (const Tree& t : trees)
    if (!t.is_leaf()) return false;
  return true;
}

int Forest::leaf_start(int tree_index) const {
  assert(tree_index >= 0 && tree_index <= tree_count());
  int col = 0;
  for (int i = 0; i < tree_index; ++i) col += trees[i].leaf_count();
  return col;
}

Forest::Location Forest::locate_column(int column) const {
  assert(column >= 0);
  int col = column;
  for (int i = 0; i < tree_count(); ++i) {
    int leaves = trees[i].leaf_count();
    if (col < leaves) return {i, col};
    col -= leaves;
  }
  assert(false && "column outside window");
  return {tree_count() - 1, 0};
}

bool operator==(const Forest& a, const Forest& b) {
  return a.pointer == b.pointer && a.trees == b.trees;
}

}  // namespace forestf
