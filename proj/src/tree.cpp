#include "forestf/tree.hpp"

#include <algorithm>
#include <cassert>

namespace forestf {

Tree Tree::caret(Tree left, Tree right) {
  auto node = std::make_shared<const Node>(Node{
      left, right, left.leaf_count() + right.leaf_count(),
      1 + std::max(left.height(), right.height())});
  return Tree(std::move(node));
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() == b.is_leaf();
  if (a.leaf_count() != b.leaf_count()) return false;
  return a.left() == b.left() && a.right() == b.right();
}

bool leaf_is_left_child(const Tree& tree, int index) {
  const Tree* cur = &tree;
  while (!cur->is_leaf()) {
    int ll = cur->left().leaf_count();
    if (index < ll) {
      if (cur->left().is_leaf()) return true;
      cur = &cur->left();
    } else {
      index -= ll;
      if (cur->right().is_leaf()) return false;
      cur = &cur->right();
    }
  }
  return false;  // trivial tree: the lone leaf has no parent
}

bool has_exposed_caret_at(const Tree& tree, int index) {
  if (tree.is_leaf()) return false;
  if (tree.left().is_leaf() && tree.right().is_leaf()) return index == 0;
  int ll = tree.left().leaf_count();
  if (index + 1 < ll) return has_exposed_caret_at(tree.left(), index);
  if (index >= ll) return has_exposed_caret_at(tree.right(), index - ll);
  return false;  // the pair straddles two distinct subtrees
}

Tree remove_exposed_caret(const Tree& tree, int index) {
  assert(has_exposed_caret_at(tree, index));
  if (tree.left().is_leaf() && tree.right().is_leaf()) return Tree::leaf();
  int ll = tree.left().leaf_count();
  if (index + 1 < ll)
    return Tree::caret(remove_exposed_caret(tree.left(), index), tree.right());
  return Tree::caret(tree.left(), remove_exposed_caret(tree.right(), index - ll));
}

Tree insert_caret_at_leaf(const Tree& tree, int index) {
  if (tree.is_leaf()) {
    assert(index == 0);
    return Tree::caret(Tree::leaf(), Tree::leaf());
  }
  int ll = tree.left().leaf_count();
  if (index < ll)
    return Tree::caret(insert_caret_at_leaf(tree.left(), index), tree.right());
  return Tree::caret(tree.left(), insert_caret_at_leaf(tree.right(), index - ll));
}

}  // namespace forestf
