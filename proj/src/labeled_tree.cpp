#include "sdst/labeled_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sdst {

LabeledTree::LabeledTree(Label label_universe)
    : universe_(label_universe),
      parent_{kNoNode},
      label_{0},
      depth_{0},
      first_child_{kNoNode},
      last_child_{kNoNode},
      next_sibling_{kNoNode} {}

TreeNode LabeledTree::add_child(TreeNode parent, Label label) {
  if (parent >= size()) throw std::out_of_range("unknown tree node " + std::to_string(parent));
  if (label == 0 || label > universe_)
    throw std::out_of_range("label " + std::to_string(label) + " outside [1.." + std::to_string(universe_) + "]");
  const auto v = static_cast<TreeNode>(size());
  parent_.push_back(parent);
  label_.push_back(label);
  depth_.push_back(depth_[parent] + 1);
  first_child_.push_back(kNoNode);
  last_child_.push_back(kNoNode);
  next_sibling_.push_back(kNoNode);
  if (last_child_[parent] == kNoNode)
    first_child_[parent] = v;
  else
    next_sibling_[last_child_[parent]] = v;
  last_child_[parent] = v;
  return v;
}

std::vector<TreeNode> LabeledTree::children(TreeNode v) const {
  std::vector<TreeNode> out;
  for (auto c = first_child_.at(v); c != kNoNode; c = next_sibling_[c]) out.push_back(c);
  return out;
}

std::vector<TreeNode> LabeledTree::preorder() const {
  std::vector<TreeNode> order;
  order.reserve(size());
  std::vector<TreeNode> stack{kRoot};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto mark = stack.size();
    for (auto c = first_child_[v]; c != kNoNode; c = next_sibling_[c]) stack.push_back(c);
    std::reverse(stack.begin() + static_cast<std::ptrdiff_t>(mark), stack.end());
  }
  return order;
}

std::vector<Label> LabeledTree::path_labels(TreeNode v) const {
  std::vector<Label> out;
  for (auto w = v; w != kRoot; w = parent_.at(w)) out.push_back(label_[w]);
  std::reverse(out.begin(), out.end());
  return out;
}

Extraction extract(const LabeledTree& source, Label new_universe,
                   const std::function<std::optional<Label>(TreeNode, Label)>& relabel) {
  Extraction ex{LabeledTree(new_universe), std::vector<TreeNode>(source.size(), kNoNode), {}};
  ex.origin.push_back(LabeledTree::kRoot);
  ex.image[LabeledTree::kRoot] = LabeledTree::kRoot;
  for (auto v : source.preorder()) {
    if (v == LabeledTree::kRoot) continue;
    const auto up = ex.image[source.parent(v)];
    if (auto l = relabel(v, source.label(v))) {
      ex.image[v] = ex.tree.add_child(up, *l);
      ex.origin.push_back(v);
    } else {
      ex.image[v] = up;
    }
  }
  return ex;
}

}  // namespace sdst
