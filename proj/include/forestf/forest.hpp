#pragma once

#include <vector>

#include "forestf/tree.hpp"

namespace forestf {

// A bounded binary forest: the stored window of trees, left to right, plus a
// pointer designating one tree of the window. Trees outside the window are
// implicitly trivial. Columns are leaf positions counted across the window;
// a tree with L leaves occupies L consecutive columns.
struct Forest {
  std::vector<Tree> trees;
  int pointer = 0;

  int tree_count() const { return static_cast<int>(trees.size()); }
  int total_leaves() const;
  bool all_trivial() const;

  // First column occupied by trees[tree_index].
  int leaf_start(int tree_index) const;

  struct Location {
    int tree;  // index into trees
    int leaf;  // leaf index within that tree
  };
  Location locate_column(int column) const;
};

bool operator==(const Forest& a, const Forest& b);
inline bool operator!=(const Forest& a, const Forest& b) { return !(a == b); }

}  // namespace forestf
