#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace sdst {

using Label = std::uint32_t;
using TreeNode = std::uint32_t;

inline constexpr TreeNode kNoNode = std::numeric_limits<TreeNode>::max();

// Rooted ordinal tree; every non-root node carries one label in [1..L].
// Nodes are numbered in creation order, so a parent always has a smaller id
// than its children; siblings keep creation order.
class LabeledTree {
 public:
  static constexpr TreeNode kRoot = 0;

  LabeledTree() : LabeledTree(0) {}
  explicit LabeledTree(Label label_universe);

  // Throws std::out_of_range on an unknown parent or a label outside [1..L].
  TreeNode add_child(TreeNode parent, Label label);

  std::size_t size() const { return parent_.size(); }
  Label label_universe() const { return universe_; }

  TreeNode parent(TreeNode v) const { return parent_.at(v); }
  Label label(TreeNode v) const { return label_.at(v); }  // 0 at the root
  std::uint32_t depth(TreeNode v) const { return depth_.at(v); }
  TreeNode first_child(TreeNode v) const { return first_child_[v]; }
  TreeNode next_sibling(TreeNode v) const { return next_sibling_[v]; }
  std::vector<TreeNode> children(TreeNode v) const;

  // Node ids in preorder (children left to right).
  std::vector<TreeNode> preorder() const;

  // Labels on the root->v path, root excluded, v included, top-down.
  std::vector<Label> path_labels(TreeNode v) const;

 private:
  Label universe_;
  std::vector<TreeNode> parent_;
  std::vector<Label> label_;
  std::vector<std::uint32_t> depth_;
  std::vector<TreeNode> first_child_;
  std::vector<TreeNode> last_child_;
  std::vector<TreeNode> next_sibling_;
};

// Result of deleting every node not selected (the root always stays) and
// splicing the children of deleted nodes into their parents, order kept.
struct Extraction {
  LabeledTree tree;
  std::vector<TreeNode> image;   // per source node: nearest kept ancestor-or-self
  std::vector<TreeNode> origin;  // per extracted node: its source node
};

// `relabel` returns the new label of a kept node, nullopt to delete it.
Extraction extract(const LabeledTree& source, Label new_universe,
                   const std::function<std::optional<Label>(TreeNode, Label)>& relabel);

}  // namespace sdst
