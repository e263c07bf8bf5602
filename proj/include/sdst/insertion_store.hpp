#pragma once

#include <cstdint>
#include <vector>

#include "sdst/graph_builder.hpp"
#include "sdst/labeled_tree.hpp"
#include "sdst/path_hierarchy.hpp"

namespace sdst {

// Insertion tree: a chain of S \ p(S) below v(p(S)) ends at v(S), so the
// labels on the root->v(S) path are exactly S.
class InsertionStore {
 public:
  InsertionStore(std::vector<ParentEdge> edges, Element u);

  SetIndex size() const { return static_cast<SetIndex>(anchor_.size()); }
  Element universe() const { return u_; }

  bool member(SetIndex set, Element x) const;
  std::uint64_t rank(SetIndex set, Element x) const;
  Element access(SetIndex set, std::uint64_t i, DescentCounter* counter = nullptr) const;
  std::uint64_t cardinality(SetIndex set) const { return tree_.depth(anchor_.at(set)); }

  const LabeledTree& tree() const { return tree_; }
  const PathHierarchy& hierarchy() const { return hierarchy_; }
  TreeNode anchor(SetIndex set) const { return anchor_.at(set); }
  const std::vector<ParentEdge>& edges() const { return edges_; }

 private:
  Element u_;
  std::vector<ParentEdge> edges_;
  LabeledTree tree_;
  std::vector<TreeNode> anchor_;
  PathHierarchy hierarchy_;
};

}  // namespace sdst
