#include "avoidlab/binary_tree.hpp"

#include <algorithm>
#include <climits>
#include <functional>

#include <json.hpp>

#include "avoidlab/errors.hpp"

namespace avoidlab {

namespace {

using NodePtr = std::unique_ptr<TreeNode>;

NodePtr clone(const TreeNode* src, bool keep_labels) {
  if (!src) return nullptr;
  auto node = std::make_unique<TreeNode>();
  node->label = keep_labels ? src->label : 0;
  node->left = clone(src->left.get(), keep_labels);
  node->right = clone(src->right.get(), keep_labels);
  return node;
}

int count_nodes(const TreeNode* node) {
  if (!node) return 0;
  return 1 + count_nodes(node->left.get()) + count_nodes(node->right.get());
}

bool equal_nodes(const TreeNode* a, const TreeNode* b, bool with_labels) {
  if (!a || !b) return a == b;
  if (with_labels && a->label != b->label) return false;
  return equal_nodes(a->left.get(), b->left.get(), with_labels) &&
         equal_nodes(a->right.get(), b->right.get(), with_labels);
}

void paren_render(const TreeNode* node, bool labeled, std::string& out) {
  if (!node) {
    out += "·";
    return;
  }
  out += '(';
  paren_render(node->left.get(), labeled, out);
  out += ')';
  if (labeled) {
    out += std::to_string(node->label);
  } else {
    out += '*';
  }
  out += '(';
  paren_render(node->right.get(), labeled, out);
  out += ')';
}

nlohmann::json json_render(const TreeNode* node, bool labeled) {
  if (!node) return nullptr;
  nlohmann::json j = nlohmann::json::object();
  if (labeled) j["label"] = node->label;
  if (node->left) j["left"] = json_render(node->left.get(), labeled);
  if (node->right) j["right"] = json_render(node->right.get(), labeled);
  return j;
}

std::string paren_string(const TreeNode* root, bool labeled) {
  if (!root) return "·";
  std::string out;
  out += '(';
  paren_render(root->left.get(), labeled, out);
  out += ')';
  out += labeled ? std::to_string(root->label) : std::string("*");
  out += '(';
  paren_render(root->right.get(), labeled, out);
  out += ')';
  return out;
}

void strip_labels(TreeNode* node) {
  if (!node) return;
  node->label = 0;
  strip_labels(node->left.get());
  strip_labels(node->right.get());
}

}  // namespace

BinaryTree::BinaryTree(std::unique_ptr<TreeNode> root) : root_(std::move(root)) {
  strip_labels(root_.get());
}

BinaryTree::BinaryTree(const BinaryTree& other) : root_(clone(other.root_.get(), false)) {}

BinaryTree& BinaryTree::operator=(const BinaryTree& other) {
  if (this != &other) root_ = clone(other.root_.get(), false);
  return *this;
}

BinaryTree BinaryTree::leaf() { return BinaryTree(std::make_unique<TreeNode>()); }

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
  auto n = std::make_unique<TreeNode>();
  n->left = clone(left.root(), false);
  n->right = clone(right.root(), false);
  return BinaryTree(std::move(n));
}

int BinaryTree::size() const { return count_nodes(root_.get()); }

bool BinaryTree::operator==(const BinaryTree& other) const {
  return equal_nodes(root_.get(), other.root_.get(), false);
}

std::string BinaryTree::to_paren() const { return paren_string(root_.get(), false); }

std::string BinaryTree::to_json() const {
  return json_render(root_.get(), false).dump();
}

LabeledBinaryTree::LabeledBinaryTree(std::unique_ptr<TreeNode> root)
    : root_(std::move(root)) {}

LabeledBinaryTree::LabeledBinaryTree(const LabeledBinaryTree& other)
    : root_(clone(other.root_.get(), true)) {}

LabeledBinaryTree& LabeledBinaryTree::operator=(const LabeledBinaryTree& other) {
  if (this != &other) root_ = clone(other.root_.get(), true);
  return *this;
}

LabeledBinaryTree LabeledBinaryTree::leaf(int label) {
  auto n = std::make_unique<TreeNode>();
  n->label = label;
  return LabeledBinaryTree(std::move(n));
}

LabeledBinaryTree LabeledBinaryTree::node(int label, LabeledBinaryTree left,
                                          LabeledBinaryTree right) {
  auto n = std::make_unique<TreeNode>();
  n->label = label;
  n->left = clone(left.root(), true);
  n->right = clone(right.root(), true);
  return LabeledBinaryTree(std::move(n));
}

int LabeledBinaryTree::size() const { return count_nodes(root_.get()); }

bool LabeledBinaryTree::operator==(const LabeledBinaryTree& other) const {
  return equal_nodes(root_.get(), other.root_.get(), true);
}

std::string LabeledBinaryTree::to_paren() const { return paren_string(root_.get(), true); }

std::string LabeledBinaryTree::to_json() const {
  return json_render(root_.get(), true).dump();
}

namespace {

NodePtr build_range(const std::vector<int>& entries, int lo, int hi) {
  if (lo >= hi) return nullptr;
  int max_at = lo;
  for (int i = lo + 1; i < hi; ++i) {
    if (entries[static_cast<size_t>(i)] > entries[static_cast<size_t>(max_at)]) max_at = i;
  }
  auto node = std::make_unique<TreeNode>();
  node->label = entries[static_cast<size_t>(max_at)];
  node->left = build_range(entries, lo, max_at);
  node->right = build_range(entries, max_at + 1, hi);
  return node;
}

}  // namespace

LabeledBinaryTree build_decreasing_tree(const Permutation& w) {
  if (w.empty()) {
    throw ValidationError("the empty permutation has no decreasing tree");
  }
  return LabeledBinaryTree(build_range(w.entries(), 0, w.size()));
}

namespace {

void inorder_collect(const TreeNode* node, int parent_label, std::vector<int>& out) {
  if (!node) return;
  if (parent_label != 0 && node->label >= parent_label) {
    throw ValidationError("labeling is not decreasing: child " +
                          std::to_string(node->label) + " under parent " +
                          std::to_string(parent_label));
  }
  inorder_collect(node->left.get(), node->label, out);
  out.push_back(node->label);
  inorder_collect(node->right.get(), node->label, out);
}

}  // namespace

Permutation tree_to_permutation(const LabeledBinaryTree& t) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(t.size()));
  inorder_collect(t.root(), 0, out);
  return Permutation(std::move(out));
}

BinaryTree erase_labels(const LabeledBinaryTree& t) {
  return BinaryTree(clone(t.root(), false));
}

namespace {

// Labels the subtree with the block [lo, lo+size-1]: root takes the top,
// the right subtree the bottom R labels, the left subtree the middle.
NodePtr assign_blocks(const TreeNode* shape, int lo) {
  if (!shape) return nullptr;
  const int sz = count_nodes(shape);
  const int right_sz = count_nodes(shape->right.get());
  auto node = std::make_unique<TreeNode>();
  node->label = lo + sz - 1;
  node->right = assign_blocks(shape->right.get(), lo);
  node->left = assign_blocks(shape->left.get(), lo + right_sz);
  return node;
}

}  // namespace

LabeledBinaryTree canonical_label(const BinaryTree& shape) {
  return LabeledBinaryTree(assign_blocks(shape.root(), 1));
}

namespace {

NodePtr complete_node(const TreeNode* src) {
  auto node = std::make_unique<TreeNode>();
  node->left = src && src->left ? complete_node(src->left.get())
                                : std::make_unique<TreeNode>();
  node->right = src && src->right ? complete_node(src->right.get())
                                  : std::make_unique<TreeNode>();
  return node;
}

}  // namespace

BinaryTree complete(const BinaryTree& t) {
  // The empty tree completes to a single node: 2*0 + 1.
  if (t.empty()) return BinaryTree::leaf();
  return BinaryTree(complete_node(t.root()));
}

namespace {

NodePtr prune_node(const TreeNode* src) {
  if (!src->left && !src->right) return nullptr;
  auto node = std::make_unique<TreeNode>();
  node->left = src->left && (src->left->left || src->left->right)
                   ? prune_node(src->left.get())
                   : nullptr;
  node->right = src->right && (src->right->left || src->right->right)
                    ? prune_node(src->right.get())
                    : nullptr;
  return node;
}

}  // namespace

BinaryTree prune_leaves(const BinaryTree& t) {
  if (!is_complete(t)) {
    throw ValidationError("prune_leaves requires a complete tree");
  }
  if (t.empty()) return BinaryTree();
  return BinaryTree(prune_node(t.root()));
}

namespace {

bool complete_node_check(const TreeNode* node) {
  if (!node) return true;
  if (static_cast<bool>(node->left) != static_cast<bool>(node->right)) return false;
  return complete_node_check(node->left.get()) && complete_node_check(node->right.get());
}

bool decreasing_check(const TreeNode* node, int parent_label) {
  if (!node) return true;
  if (parent_label != 0 && node->label >= parent_label) return false;
  return decreasing_check(node->left.get(), node->label) &&
         decreasing_check(node->right.get(), node->label);
}

void min_max_labels(const TreeNode* node, int& lo, int& hi) {
  if (!node) return;
  lo = std::min(lo, node->label);
  hi = std::max(hi, node->label);
  min_max_labels(node->left.get(), lo, hi);
  min_max_labels(node->right.get(), lo, hi);
}

bool blocks_check(const TreeNode* node) {
  if (!node) return true;
  if (node->left && node->right) {
    int left_lo = INT_MAX, left_hi = INT_MIN;
    int right_lo = INT_MAX, right_hi = INT_MIN;
    min_max_labels(node->left.get(), left_lo, left_hi);
    min_max_labels(node->right.get(), right_lo, right_hi);
    if (left_lo <= right_hi) return false;
  }
  return blocks_check(node->left.get()) && blocks_check(node->right.get());
}

}  // namespace

bool is_complete(const BinaryTree& t) { return complete_node_check(t.root()); }

bool is_decreasing(const LabeledBinaryTree& t) {
  return decreasing_check(t.root(), 0);
}

bool left_labels_exceed_right(const LabeledBinaryTree& t) {
  return blocks_check(t.root());
}

}  // namespace avoidlab
