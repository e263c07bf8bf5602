#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sdst/graph_builder.hpp"
#include "sdst/labeled_tree.hpp"
#include "sdst/path_hierarchy.hpp"

namespace sdst {

enum class RootSide : std::uint8_t { empty = 0, univ = 1 };

// Correction added to the left-half count when descending for a set whose
// tree is rooted at UNIV. left_half adds |[a..m] ∩ U|; whole_interval adds
// |[a..b] ∩ U| and is kept only to show that it gives wrong answers.
enum class UnivCorrection : std::uint8_t { left_half, whole_interval };

// Indel trees. Node labels encode +x as x and -x as u + x. Each tree gets
// two hierarchies, one over the + nodes and one over the - nodes, both over
// the element range [1..u].
class IndelStore {
 public:
  IndelStore(std::vector<ParentEdge> edges, Element u);

  SetIndex size() const { return static_cast<SetIndex>(anchor_.size()); }
  Element universe() const { return u_; }

  bool member(SetIndex set, Element x) const;
  std::uint64_t rank(SetIndex set, Element x) const;
  Element access(SetIndex set, std::uint64_t i, DescentCounter* counter = nullptr,
                 UnivCorrection correction = UnivCorrection::left_half) const;
  std::uint64_t cardinality(SetIndex set) const { return cardinality_.at(set); }

  RootSide root_side(SetIndex set) const { return side_of_.at(set); }
  TreeNode anchor(SetIndex set) const { return anchor_.at(set); }
  const LabeledTree& tree(RootSide side) const { return trees_[index(side)].tree; }
  std::size_t node_count() const { return trees_[0].tree.size() + trees_[1].tree.size(); }
  const std::vector<ParentEdge>& edges() const { return edges_; }

  // On every root-to-node path, +x only appears while x is absent and -x
  // only while x is present.
  bool well_formed() const;

  static bool is_insertion_label(Label l, Element u) { return l <= u; }
  static Element element_of(Label l, Element u) { return l <= u ? l : l - u; }

 private:
  struct Tree {
    LabeledTree tree;
    Extraction plus, minus;  // one extraction step by sign
    PathHierarchy plus_index, minus_index;
  };
  static std::size_t index(RootSide side) { return static_cast<std::size_t>(side); }
  const Tree& tree_of(SetIndex set) const { return trees_[index(side_of_.at(set))]; }

  Element u_;
  std::vector<ParentEdge> edges_;
  std::array<Tree, 2> trees_;
  std::vector<RootSide> side_of_;
  std::vector<TreeNode> anchor_;
  std::vector<std::uint64_t> cardinality_;
};

}  // namespace sdst
