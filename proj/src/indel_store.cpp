#include "sdst/indel_store.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sdst {

IndelStore::IndelStore(std::vector<ParentEdge> edges, Element u)
    : u_(u),
      edges_(std::move(edges)),
      trees_{Tree{LabeledTree(2 * u), {}, {}, {}, {}}, Tree{LabeledTree(2 * u), {}, {}, {}, {}}},
      side_of_(edges_.size(), RootSide::empty),
      anchor_(edges_.size(), LabeledTree::kRoot),
      cardinality_(edges_.size(), 0) {
  for (SetIndex v : topological_order(edges_)) {
    const auto& e = edges_[v];
    TreeNode at = LabeledTree::kRoot;
    std::uint64_t base = 0;
    if (e.parent.is_set()) {
      side_of_[v] = side_of_[e.parent.set()];
      at = anchor_[e.parent.set()];
      base = cardinality_[e.parent.set()];
    } else if (e.parent.is_univ_root()) {
      side_of_[v] = RootSide::univ;
      base = u_;
    }
    if (e.deletions.size() > base + e.insertions.size())
      throw std::invalid_argument("edge deletes more elements than its parent holds");

    // Chain order: by element value, insertions and deletions interleaved.
    auto& tree = trees_[index(side_of_[v])].tree;
    auto ins = e.insertions.begin(), del = e.deletions.begin();
    while (ins != e.insertions.end() || del != e.deletions.end()) {
      if (del == e.deletions.end() || (ins != e.insertions.end() && *ins < *del))
        at = tree.add_child(at, *ins++);
      else
        at = tree.add_child(at, u_ + *del++);
    }
    anchor_[v] = at;
    cardinality_[v] = base + e.insertions.size() - e.deletions.size();
  }

  for (auto& t : trees_) {
    const Element u = u_;
    t.plus = extract(t.tree, u, [u](TreeNode, Label l) -> std::optional<Label> {
      return is_insertion_label(l, u) ? std::optional<Label>(l) : std::nullopt;
    });
    t.minus = extract(t.tree, u, [u](TreeNode, Label l) -> std::optional<Label> {
      return is_insertion_label(l, u) ? std::nullopt : std::optional<Label>(l - u);
    });
    t.plus_index = PathHierarchy(t.plus.tree);
    t.minus_index = PathHierarchy(t.minus.tree);
  }
}

bool IndelStore::member(SetIndex set, Element x) const {
  if (x < 1 || x > u_) throw std::out_of_range("element " + std::to_string(x) + " out of range");
  const auto& t = tree_of(set);
  const auto v = anchor_[set];
  auto up = t.plus_index.nearest_labeled(t.plus.image[v], x);
  auto um = t.minus_index.nearest_labeled(t.minus.image[v], x);
  if (up && um) return t.tree.depth(t.plus.origin[*up]) > t.tree.depth(t.minus.origin[*um]);
  if (up) return true;
  if (um) return false;
  return side_of_[set] == RootSide::univ;
}

std::uint64_t IndelStore::rank(SetIndex set, Element x) const {
  if (x > u_) throw std::out_of_range("element " + std::to_string(x) + " out of range");
  const auto& t = tree_of(set);
  const auto v = anchor_[set];
  const std::int64_t plus = t.plus_index.count_prefix(t.plus.image[v], x);
  const std::int64_t minus = t.minus_index.count_prefix(t.minus.image[v], x);
  return static_cast<std::uint64_t>(plus - minus + (side_of_[set] == RootSide::univ ? x : 0));
}

Element IndelStore::access(SetIndex set, std::uint64_t i, DescentCounter* counter, UnivCorrection correction) const {
  if (i < 1 || i > cardinality_.at(set)) throw std::out_of_range("rank out of range");
  const auto& t = tree_of(set);
  const auto v = anchor_[set];
  const bool univ = side_of_[set] == RootSide::univ;
  // Universe elements in [a..r].
  auto present = [this](Label a, Label r) -> std::int64_t {
    r = std::min<Label>(r, u_);
    return r >= a ? std::int64_t(r) - a + 1 : 0;
  };

  auto plus = t.plus_index.cursor(t.plus.image[v]);
  auto minus = t.minus_index.cursor(t.minus.image[v]);
  auto want = static_cast<std::int64_t>(i);
  if (counter) ++counter->descents;
  while (!plus.at_leaf()) {
    std::int64_t left = std::int64_t(plus.zeros()) - std::int64_t(minus.zeros());
    if (univ) left += present(plus.lo(), correction == UnivCorrection::left_half ? plus.mid() : plus.hi());
    const bool right = want > left;
    if (right) want -= left;
    plus.descend(right);
    minus.descend(right);
    if (counter) ++counter->levels;
  }
  return plus.lo();
}

bool IndelStore::well_formed() const {
  for (std::size_t side = 0; side < 2; ++side) {
    const auto& tree = trees_[side].tree;
    std::vector<char> present(std::size_t(u_) + 1, side == index(RootSide::univ) ? 1 : 0);
    // (node, entering?) pairs; leaving a node undoes its edit.
    std::vector<std::pair<TreeNode, bool>> stack{{LabeledTree::kRoot, true}};
    while (!stack.empty()) {
      auto [v, entering] = stack.back();
      stack.pop_back();
      const Label l = tree.label(v);
      const Element x = l ? element_of(l, u_) : 0;
      const bool insert = is_insertion_label(l, u_);
      if (!entering) {
        present[x] = insert ? 0 : 1;
        continue;
      }
      if (v != LabeledTree::kRoot) {
        if (insert == bool(present[x])) return false;
        present[x] = insert ? 1 : 0;
        stack.emplace_back(v, false);
      }
      for (auto c = tree.first_child(v); c != kNoNode; c = tree.next_sibling(c)) stack.emplace_back(c, true);
    }
  }
  return true;
}

}  // namespace sdst
