#pragma once

#include <cstdint>
#include <vector>

#include "sdst/lcp_index.hpp"
#include "sdst/set_family.hpp"

namespace sdst {

// The outgoing edge of one set: its parent and the elements to insert into
// (and delete from) the parent to obtain the set. Both lists are sorted.
struct ParentEdge {
  GraphNode parent;
  std::vector<Element> insertions;  // S \ p(S)
  std::vector<Element> deletions;   // p(S) \ S

  std::uint64_t weight() const { return insertions.size() + deletions.size(); }
  bool operator==(const ParentEdge&) const = default;
};

// Minimum-weight symdiff graph: two trees rooted at EMPTY and UNIV.
struct SymdiffGraph {
  Element u = 0;
  std::vector<ParentEdge> edges;       // per set
  std::vector<GraphNode> attach_order;  // sets in the order Prim attached them
  std::uint64_t total_weight = 0;       // Δ(S)
  std::uint64_t max_edge_weight = 0;    // ℓ
  std::uint64_t advances = 0;           // iterator advances with k >= 1
  std::uint64_t initial_bag_size = 0;
};

// Each set points at a largest strict subset (or EMPTY).
struct InsertionGraph {
  Element u = 0;
  std::vector<ParentEdge> edges;  // deletions always empty
  std::uint64_t total_weight = 0;  // I(S)
  std::uint64_t max_edge_weight = 0;
  std::uint64_t advances = 0;
};

// Prim over S ∪ {EMPTY, UNIV} where edge weights are discovered in
// increasing order: round k advances every unresolved edge once and so
// resolves exactly the weights k-1.
SymdiffGraph build_symdiff_graph(const SetFamily& family, const LcpIndex& index);

// Sets are inserted by increasing size; each new set races iterators against
// all earlier sets and takes the first strict subset whose iterator finishes.
InsertionGraph build_insertion_graph(const SetFamily& family, const LcpIndex& index);

struct TreeSplit {
  std::vector<GraphNode> empty_tree;  // EMPTY first
  std::vector<GraphNode> univ_tree;   // UNIV first
};

// Partitions nodes by the root their parent chain reaches. Sets are listed
// parents-first.
TreeSplit split_two_trees(const std::vector<ParentEdge>& edges);

// Sets ordered so every parent precedes its children. Throws
// std::invalid_argument on a cycle or a dangling parent.
std::vector<SetIndex> topological_order(const std::vector<ParentEdge>& edges);

// Rebuilds every set by replaying edges from the roots.
std::vector<std::vector<Element>> replay(const std::vector<ParentEdge>& edges, Element u);

}  // namespace sdst
