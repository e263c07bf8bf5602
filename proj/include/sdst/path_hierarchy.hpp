#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sdst/labeled_tree.hpp"

namespace sdst {

// Tallies descents through the hierarchy; `levels` sums the levels crossed.
struct DescentCounter {
  std::uint64_t descents = 0;
  std::uint64_t levels = 0;
};

// Wavelet-style hierarchy of extracted 0/1 trees over a labeled tree.
//
// The label range [1..L] is padded to [1..2^h], h = ceil(log2 L), and split by
// successive halving, so every descent crosses exactly h levels. The tree of
// interval [a..b] holds its root plus every node whose label lies in [a..b];
// a node is a 0-node when its label is <= m = floor((a+b)/2). For each node we
// keep the inclusive counts of labeled and 0-labeled nodes on its root path,
// and direct references into the two child trees (the nearest 0-node and
// 1-node ancestor-or-self). Child trees that would be root-only are not
// stored; references to them use kEmptyTree.
class PathHierarchy {
 public:
  static constexpr TreeNode kEmptyTree = kNoNode - 1;

  PathHierarchy() = default;
  explicit PathHierarchy(const LabeledTree& tree);

  Label label_universe() const { return universe_; }
  Label padded_universe() const { return Label(1) << height_; }
  unsigned levels() const { return height_; }
  std::size_t source_size() const { return to_level0_.size(); }

  // Position inside the hierarchy during a root-to-leaf descent.
  class Cursor {
   public:
    Label lo() const { return lo_; }
    Label hi() const { return hi_; }
    Label mid() const { return lo_ + (hi_ - lo_) / 2; }
    bool at_leaf() const { return lo_ == hi_; }
    unsigned level() const { return level_; }
    // Labels on the current path within [lo..hi] and within [lo..mid].
    std::uint32_t depth() const;
    std::uint32_t zeros() const;
    // Source node behind the current node (the source root for a tree root).
    TreeNode origin() const;
    void descend(bool right);

   private:
    friend class PathHierarchy;
    const PathHierarchy* h_ = nullptr;
    unsigned level_ = 0;
    TreeNode node_ = 0;
    Label lo_ = 1, hi_ = 1;
  };

  Cursor cursor(TreeNode v) const;

  // Labels <= x on the root->v path (v inclusive, root exclusive).
  std::uint32_t count_prefix(TreeNode v, Label x, DescentCounter* counter = nullptr) const;
  // Labels in [a..b]; throws std::invalid_argument unless 1 <= a <= b <= L.
  std::uint32_t count_range(TreeNode v, Label a, Label b, DescentCounter* counter = nullptr) const;
  // i-th smallest label on the path; throws std::out_of_range("rank out of
  // range") unless 1 <= i <= depth(v).
  Label select(TreeNode v, std::uint32_t i, DescentCounter* counter = nullptr) const;
  // Deepest node labeled alpha on the path, v inclusive.
  std::optional<TreeNode> nearest_labeled(TreeNode v, Label alpha, DescentCounter* counter = nullptr) const;
  std::uint32_t label_rank(TreeNode v, Label alpha) const;
  // i-th node labeled alpha counted from the root downwards.
  TreeNode label_select(TreeNode v, Label alpha, std::uint32_t i) const;

  // Introspection, mainly for tests and stats.
  struct NodeView {
    TreeNode origin;
    Label lo, hi;
    std::uint32_t depth, zeros;
    TreeNode image[2];  // into the next level; kEmptyTree when root-only
    bool is_root;
  };
  std::size_t level_size(unsigned level) const { return levels_.at(level).nodes.size(); }
  std::size_t level_tree_count(unsigned level) const { return levels_.at(level).tree_start.size(); }
  NodeView view(unsigned level, TreeNode node) const;
  std::uint32_t depth_at(unsigned level, TreeNode node) const;

 private:
  // Fields read on every descent step share one record.
  struct Node {
    std::uint32_t depth = 0;
    std::uint32_t zeros = 0;
    TreeNode image[2] = {kEmptyTree, kEmptyTree};
  };
  struct Level {
    std::vector<TreeNode> parent;  // level-local; kNoNode at tree roots
    std::vector<TreeNode> origin;
    std::vector<Node> nodes;
    std::vector<std::uint32_t> tree_start;
    std::vector<Label> tree_lo;
  };

  void descend_to(Cursor& c, Label x, DescentCounter* counter) const;

  Label universe_ = 0;
  unsigned height_ = 0;
  std::vector<Label> source_label_;
  std::vector<TreeNode> to_level0_;
  std::vector<Level> levels_;
};

}  // namespace sdst
