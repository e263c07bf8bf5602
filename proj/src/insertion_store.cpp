#include "sdst/insertion_store.hpp"

#include <stdexcept>
#include <string>

namespace sdst {

InsertionStore::InsertionStore(std::vector<ParentEdge> edges, Element u)
    : u_(u), edges_(std::move(edges)), tree_(u), anchor_(edges_.size(), LabeledTree::kRoot) {
  for (SetIndex v : topological_order(edges_)) {
    const auto& e = edges_[v];
    if (e.parent.is_univ_root()) throw std::invalid_argument("insertion graph cannot point at UNIV");
    if (!e.deletions.empty()) throw std::invalid_argument("insertion graph edge has deletions");
    TreeNode at = e.parent.is_set() ? anchor_[e.parent.set()] : LabeledTree::kRoot;
    for (Element x : e.insertions) at = tree_.add_child(at, x);
    anchor_[v] = at;
  }
  hierarchy_ = PathHierarchy(tree_);
}

bool InsertionStore::member(SetIndex set, Element x) const {
  if (x < 1 || x > u_) throw std::out_of_range("element " + std::to_string(x) + " out of range");
  return hierarchy_.nearest_labeled(anchor_.at(set), x).has_value();
}

std::uint64_t InsertionStore::rank(SetIndex set, Element x) const {
  if (x > u_) throw std::out_of_range("element " + std::to_string(x) + " out of range");
  return hierarchy_.count_prefix(anchor_.at(set), x);
}

Element InsertionStore::access(SetIndex set, std::uint64_t i, DescentCounter* counter) const {
  const auto v = anchor_.at(set);
  if (i < 1 || i > tree_.depth(v)) throw std::out_of_range("rank out of range");
  return hierarchy_.select(v, static_cast<std::uint32_t>(i), counter);
}

}  // namespace sdst
