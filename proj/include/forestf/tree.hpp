#pragma once

#include <memory>

namespace forestf {

// Immutable finite binary tree. A default-constructed Tree is a single leaf;
// internal nodes (carets) always have exactly two children. Subtrees are
// shared, so copies are cheap.
class Tree {
 public:
  Tree() = default;  // leaf

  static Tree leaf() { return Tree{}; }
  static Tree caret(Tree left, Tree right);

  bool is_leaf() const { return node_ == nullptr; }
  const Tree& left() const;
  const Tree& right() const;

  int leaf_count() const;
  int caret_count() const { return leaf_count() - 1; }
  // Length of the longest root-to-leaf path; 0 for a leaf.
  int height() const;

  friend bool operator==(const Tree& a, const Tree& b);
  friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

 private:
  struct Node;

  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Tree::Node {
  Tree left;
  Tree right;
  int leaves;
  int height;
};

inline const Tree& Tree::left() const { return node_->left; }
inline const Tree& Tree::right() const { return node_->right; }
inline int Tree::leaf_count() const { return node_ ? node_->leaves : 1; }
inline int Tree::height() const { return node_ ? node_->height : 0; }

// True iff leaf `index` is the left child of its parent caret (equivalently,
// the leftmost leaf of at least one caret). False for the root of a trivial
// tree.
bool leaf_is_left_child(const Tree& tree, int index);

// True iff leaves {index, index+1} are the two children of a single caret.
bool has_exposed_caret_at(const Tree& tree, int index);

// Removes the exposed caret over leaves {index, index+1}; the pair collapses
// to one leaf. Pre: has_exposed_caret_at(tree, index).
Tree remove_exposed_caret(const Tree& tree, int index);

// Replaces leaf `index` by a caret over two fresh leaves.
Tree insert_caret_at_leaf(const Tree& tree, int index);

}  // namespace forestf
