#include "sdst/path_hierarchy.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace sdst {

PathHierarchy::PathHierarchy(const LabeledTree& tree)
    : universe_(tree.label_universe()),
      height_(universe_ <= 1 ? 0 : static_cast<unsigned>(std::bit_width(universe_ - 1))),
      to_level0_(tree.size()),
      levels_(height_ + 1) {
  source_label_.resize(tree.size());
  for (TreeNode v = 0; v < tree.size(); ++v) source_label_[v] = tree.label(v);

  {
    auto& top = levels_[0];
    const auto order = tree.preorder();
    for (TreeNode i = 0; i < order.size(); ++i) to_level0_[order[i]] = i;
    top.origin = order;
    top.parent.resize(order.size());
    top.nodes.resize(order.size());
    for (TreeNode i = 0; i < order.size(); ++i) {
      top.parent[i] = i == 0 ? kNoNode : to_level0_[tree.parent(order[i])];
      top.nodes[i].depth = tree.depth(order[i]);
    }
    top.tree_start = {0};
    top.tree_lo = {1};
  }

  for (unsigned lvl = 0; lvl <= height_; ++lvl) {
    auto& cur = levels_[lvl];
    const Label width = padded_universe() >> lvl;
    const std::size_t size = cur.nodes.size();
    for (std::size_t t = 0; t < cur.tree_start.size(); ++t) {
      const std::size_t begin = cur.tree_start[t];
      const std::size_t end = t + 1 < cur.tree_start.size() ? cur.tree_start[t + 1] : size;
      const Label mid = cur.tree_lo[t] + (width - 1) / 2;
      for (std::size_t w = begin + 1; w < end; ++w)
        cur.nodes[w].zeros = cur.nodes[cur.parent[w]].zeros + (source_label_[cur.origin[w]] <= mid ? 1 : 0);
    }
    if (lvl == height_) break;

    auto& next = levels_[lvl + 1];
    for (std::size_t t = 0; t < cur.tree_start.size(); ++t) {
      const std::size_t begin = cur.tree_start[t];
      const std::size_t end = t + 1 < cur.tree_start.size() ? cur.tree_start[t + 1] : size;
      const Label lo = cur.tree_lo[t];
      const Label mid = lo + (width - 1) / 2;
      for (int beta = 0; beta < 2; ++beta) {
        auto bit = [&](std::size_t w) { return (source_label_[cur.origin[w]] > mid) == (beta == 1); };
        bool any = false;
        for (std::size_t w = begin + 1; w < end && !any; ++w) any = bit(w);
        if (!any) continue;

        auto image = [&](std::size_t w) -> TreeNode& { return cur.nodes[w].image[beta]; };
        const auto root = static_cast<TreeNode>(next.nodes.size());
        next.tree_start.push_back(root);
        next.tree_lo.push_back(beta ? mid + 1 : lo);
        next.parent.push_back(kNoNode);
        next.origin.push_back(cur.origin[begin]);
        next.nodes.emplace_back();
        image(begin) = root;
        for (std::size_t w = begin + 1; w < end; ++w) {
          const TreeNode up = image(cur.parent[w]);
          if (bit(w)) {
            image(w) = static_cast<TreeNode>(next.nodes.size());
            next.parent.push_back(up);
            next.origin.push_back(cur.origin[w]);
            Node fresh;
            fresh.depth = next.nodes[up].depth + 1;
            next.nodes.push_back(fresh);
          } else {
            image(w) = up;
          }
        }
      }
    }
  }
}

std::uint32_t PathHierarchy::Cursor::depth() const {
  return node_ == kEmptyTree ? 0 : h_->levels_[level_].nodes[node_].depth;
}

std::uint32_t PathHierarchy::Cursor::zeros() const {
  return node_ == kEmptyTree ? 0 : h_->levels_[level_].nodes[node_].zeros;
}

TreeNode PathHierarchy::Cursor::origin() const {
  return node_ == kEmptyTree ? LabeledTree::kRoot : h_->levels_[level_].origin[node_];
}

void PathHierarchy::Cursor::descend(bool right) {
  const Label m = mid();
  if (node_ != kEmptyTree) {
    // no labels in this interval means none in any sub-interval either
    const auto& rec = h_->levels_[level_].nodes[node_];
    node_ = rec.depth == 0 ? kEmptyTree : rec.image[right ? 1 : 0];
  }
  if (right)
    lo_ = m + 1;
  else
    hi_ = m;
  ++level_;
}

PathHierarchy::Cursor PathHierarchy::cursor(TreeNode v) const {
  if (v >= to_level0_.size()) throw std::out_of_range("unknown tree node " + std::to_string(v));
  Cursor c;
  c.h_ = this;
  c.node_ = to_level0_[v];
  c.lo_ = 1;
  c.hi_ = padded_universe();
  return c;
}

void PathHierarchy::descend_to(Cursor& c, Label x, DescentCounter* counter) const {
  if (counter) ++counter->descents;
  while (!c.at_leaf()) {
    c.descend(x > c.mid());
    if (counter) ++counter->levels;
  }
}

std::uint32_t PathHierarchy::count_prefix(TreeNode v, Label x, DescentCounter* counter) const {
  auto c = cursor(v);
  if (x == 0) return 0;
  x = std::min(x, std::max<Label>(universe_, 1));
  if (counter) ++counter->descents;
  std::uint32_t acc = 0;
  while (!c.at_leaf()) {
    const bool right = x > c.mid();
    if (right) acc += c.zeros();
    c.descend(right);
    if (counter) ++counter->levels;
  }
  return acc + c.depth();
}

std::uint32_t PathHierarchy::count_range(TreeNode v, Label a, Label b, DescentCounter* counter) const {
  if (a < 1 || a > b || b > universe_)
    throw std::invalid_argument("invalid label range [" + std::to_string(a) + ".." + std::to_string(b) + "]");
  return count_prefix(v, b, counter) - count_prefix(v, a - 1, counter);
}

Label PathHierarchy::select(TreeNode v, std::uint32_t i, DescentCounter* counter) const {
  auto c = cursor(v);
  if (i < 1 || i > c.depth()) throw std::out_of_range("rank out of range");
  if (counter) ++counter->descents;
  while (!c.at_leaf()) {
    const auto z = c.zeros();
    const bool right = i > z;
    if (right) i -= z;
    c.descend(right);
    if (counter) ++counter->levels;
  }
  return c.lo();
}

std::optional<TreeNode> PathHierarchy::nearest_labeled(TreeNode v, Label alpha, DescentCounter* counter) const {
  if (alpha < 1 || alpha > universe_) throw std::out_of_range("label " + std::to_string(alpha) + " out of range");
  auto c = cursor(v);
  descend_to(c, alpha, counter);
  if (c.depth() == 0) return std::nullopt;
  return c.origin();
}

std::uint32_t PathHierarchy::label_rank(TreeNode v, Label alpha) const { return count_range(v, alpha, alpha); }

TreeNode PathHierarchy::label_select(TreeNode v, Label alpha, std::uint32_t i) const {
  if (alpha < 1 || alpha > universe_) throw std::out_of_range("label " + std::to_string(alpha) + " out of range");
  auto c = cursor(v);
  descend_to(c, alpha, nullptr);
  const auto r = c.depth();
  if (i < 1 || i > r) throw std::out_of_range("rank out of range");
  const auto& leaf = levels_[c.level_];
  TreeNode w = c.node_;
  for (auto steps = r - i; steps > 0; --steps) w = leaf.parent[w];
  return leaf.origin[w];
}

std::uint32_t PathHierarchy::depth_at(unsigned level, TreeNode node) const {
  return node == kEmptyTree ? 0 : levels_.at(level).nodes.at(node).depth;
}

PathHierarchy::NodeView PathHierarchy::view(unsigned level, TreeNode node) const {
  const auto& l = levels_.at(level);
  auto t = static_cast<std::size_t>(std::upper_bound(l.tree_start.begin(), l.tree_start.end(), node) -
                                    l.tree_start.begin() - 1);
  NodeView nv{};
  nv.origin = l.origin.at(node);
  nv.lo = l.tree_lo[t];
  nv.hi = nv.lo + (padded_universe() >> level) - 1;
  const auto& rec = l.nodes.at(node);
  nv.depth = rec.depth;
  nv.zeros = rec.zeros;
  nv.is_root = l.parent[node] == kNoNode;
  for (int beta = 0; beta < 2; ++beta) nv.image[beta] = level < height_ ? rec.image[beta] : kEmptyTree;
  return nv;
}

}  // namespace sdst
