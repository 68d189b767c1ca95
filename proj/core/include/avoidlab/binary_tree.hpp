#pragma once

#include <memory>
#include <string>

#include "avoidlab/permutation.hpp"

namespace avoidlab {

struct TreeNode {
  int label = 0;  // 0 on unlabeled shapes
  std::unique_ptr<TreeNode> left;
  std::unique_ptr<TreeNode> right;
};

/// Finite unlabeled rooted binary tree (each node has an optional left and an
/// optional right child). Value type; equality is structural. The empty tree
/// is a first-class value.
class BinaryTree {
 public:
  BinaryTree() = default;
  /// Takes ownership of `root` and drops any labels on it.
  explicit BinaryTree(std::unique_ptr<TreeNode> root);
  BinaryTree(const BinaryTree& other);
  BinaryTree(BinaryTree&&) noexcept = default;
  BinaryTree& operator=(const BinaryTree& other);
  BinaryTree& operator=(BinaryTree&&) noexcept = default;

  static BinaryTree leaf();
  static BinaryTree node(BinaryTree left, BinaryTree right);

  bool empty() const { return root_ == nullptr; }
  int size() const;
  const TreeNode* root() const { return root_.get(); }

  bool operator==(const BinaryTree& other) const;
  bool operator!=(const BinaryTree& other) const { return !(*this == other); }

  /// "(left)*(right)" nesting with "·" for an absent child; "·" alone for the
  /// empty tree.
  std::string to_paren() const;
  /// JSON object with optional "left"/"right" members; "null" for the empty
  /// tree.
  std::string to_json() const;

 private:
  std::unique_ptr<TreeNode> root_;
};

/// Binary tree whose nodes carry distinct labels. The producing operations
/// guarantee labels {1..n} decreasing from the root; trees assembled by hand
/// through node() are checked only when an operation requires the invariant.
class LabeledBinaryTree {
 public:
  LabeledBinaryTree() = default;
  explicit LabeledBinaryTree(std::unique_ptr<TreeNode> root);
  LabeledBinaryTree(const LabeledBinaryTree& other);
  LabeledBinaryTree(LabeledBinaryTree&&) noexcept = default;
  LabeledBinaryTree& operator=(const LabeledBinaryTree& other);
  LabeledBinaryTree& operator=(LabeledBinaryTree&&) noexcept = default;

  static LabeledBinaryTree leaf(int label);
  static LabeledBinaryTree node(int label, LabeledBinaryTree left,
                                LabeledBinaryTree right);

  bool empty() const { return root_ == nullptr; }
  int size() const;
  const TreeNode* root() const { return root_.get(); }

  bool operator==(const LabeledBinaryTree& other) const;
  bool operator!=(const LabeledBinaryTree& other) const { return !(*this == other); }

  /// "(left)N(right)" nesting with "·" for an absent child.
  std::string to_paren() const;
  std::string to_json() const;

 private:
  std::unique_ptr<TreeNode> root_;
};

/// The decreasing tree of a nonempty permutation: the maximum labels the
/// root, the prefix before it builds the left subtree, the suffix after it
/// the right subtree.
LabeledBinaryTree build_decreasing_tree(const Permutation& w);

/// In-order (left, node, right) label readout; exact inverse of
/// build_decreasing_tree. Rejects labelings that are not decreasing from the
/// root.
Permutation tree_to_permutation(const LabeledBinaryTree& t);

/// Same shape, labels dropped.
BinaryTree erase_labels(const LabeledBinaryTree& t);

/// The unique decreasing labeling in which every label in a left subtree
/// exceeds every label in the sibling right subtree: the root of an n-node
/// tree gets n, a right subtree of R nodes gets the block {1..R}, the left
/// subtree the block {R+1..n-1}, recursively by rank within each block.
LabeledBinaryTree canonical_label(const BinaryTree& shape);

/// Adds children so every original node has two and every added node is a
/// leaf. |complete(t)| = 2|t| + 1; the result is complete.
BinaryTree complete(const BinaryTree& t);

/// Removes all leaves. Requires a complete input; inverse of complete.
BinaryTree prune_leaves(const BinaryTree& t);

/// True iff no node has exactly one child. The empty tree is complete.
bool is_complete(const BinaryTree& t);

/// Every child label smaller than its parent's.
bool is_decreasing(const LabeledBinaryTree& t);

/// At every node, every label in the left subtree exceeds every label in the
/// right subtree. Together with is_decreasing this characterizes the trees of
/// 132-avoiding permutations.
bool left_labels_exceed_right(const LabeledBinaryTree& t);

}  // namespace avoidlab
