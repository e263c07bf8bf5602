#include "sdst/graph_builder.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace sdst {

namespace {

constexpr std::uint64_t kUnknown = std::numeric_limits<std::uint64_t>::max();

// An edge whose weight is not known yet. Edges to EMPTY/UNIV have an
// analytic weight but still sit in the bag and are stepped like the others,
// so every edge pays min(ℓ+1, w+1) advances.
struct BagEntry {
  std::uint32_t a, b;  // raw node ids, a < b
  std::uint32_t analytic_weight;
  std::uint32_t steps;
  DiffIterator it;
};

struct Candidate {
  std::uint64_t weight = kUnknown;
  std::uint32_t lo = 0, hi = 0;  // endpoint pair, for tie-breaking
  std::uint32_t from = 0;        // tree-side endpoint

  auto key() const { return std::tie(weight, lo, hi); }
};

ParentEdge materialize(const SetFamily& family, const LcpIndex& index, SetIndex child, GraphNode parent) {
  ParentEdge edge{parent, {}, {}};
  const auto& set = family.sets[child];
  if (parent.is_empty_root()) {
    edge.insertions = set;
  } else if (parent.is_univ_root()) {
    auto it = set.begin();
    for (Element x = 1; x <= family.u; ++x) {
      if (it != set.end() && *it == x)
        ++it;
      else
        edge.deletions.push_back(x);
    }
  } else {
    for (const auto& d : diff_full(index, child, parent.set()))
      (d.side == Side::a ? edge.insertions : edge.deletions).push_back(d.value);
  }
  return edge;
}

}  // namespace

SymdiffGraph build_symdiff_graph(const SetFamily& family, const LcpIndex& index) {
  const std::uint32_t s = family.size();
  const std::uint32_t nodes = s + 2;

  SymdiffGraph g;
  g.u = family.u;
  g.edges.resize(s);

  std::vector<BagEntry> bag;
  bag.reserve(std::size_t(nodes) * (nodes - 1) / 2);
  for (std::uint32_t b = 2; b < nodes; ++b) {
    const auto size = static_cast<std::uint32_t>(family.sets[b - 2].size());
    bag.push_back({0, b, size, 0, {}});
    bag.push_back({1, b, family.u - size, 0, {}});
  }
  for (std::uint32_t a = 2; a < nodes; ++a)
    for (std::uint32_t b = a + 1; b < nodes; ++b) bag.push_back({a, b, 0, 0, DiffIterator(index, a - 2, b - 2)});
  g.initial_bag_size = bag.size();

  std::vector<char> in_tree(nodes, 0);
  in_tree[0] = in_tree[1] = 1;
  std::vector<Candidate> best(nodes);
  // Resolved edges with neither endpoint attached yet.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pending(nodes);
  std::vector<std::uint32_t> outside(s);
  std::iota(outside.begin(), outside.end(), 2u);
  std::vector<std::uint64_t> weight(nodes, 0);

  auto offer = [&](std::uint32_t out, std::uint32_t in, std::uint64_t w) {
    Candidate c{w, std::min(out, in), std::max(out, in), in};
    if (c.key() < best[out].key()) best[out] = c;
  };
  auto resolved = [&](std::uint32_t a, std::uint32_t b, std::uint32_t w) {
    if (in_tree[a] && in_tree[b]) return;
    if (in_tree[a]) {
      offer(b, a, w);
    } else if (in_tree[b]) {
      offer(a, b, w);
    } else {
      pending[a].emplace_back(b, w);
      pending[b].emplace_back(a, w);
    }
  };

  while (!outside.empty()) {
    // Round: one advance per live edge.
    for (std::size_t i = 0; i < bag.size();) {
      auto& e = bag[i];
      ++g.advances;
      bool finished;
      std::uint32_t w;
      if (e.a < 2) {
        finished = ++e.steps == e.analytic_weight + 1;
        w = e.analytic_weight;
      } else {
        finished = !e.it.advance(index);
        w = e.it.count();
      }
      if (finished) {
        resolved(e.a, e.b, w);
        e = bag.back();
        bag.pop_back();
      } else {
        ++i;
      }
    }

    // Prim steps while the lightest crossing edge is known.
    while (!outside.empty()) {
      std::size_t pick = 0;
      for (std::size_t i = 1; i < outside.size(); ++i)
        if (best[outside[i]].key() < best[outside[pick]].key()) pick = i;
      const std::uint32_t v = outside[pick];
      if (best[v].weight == kUnknown) break;

      in_tree[v] = 1;
      outside[pick] = outside.back();
      outside.pop_back();
      g.attach_order.push_back(GraphNode::from_raw(v));
      g.edges[v - 2].parent = GraphNode::from_raw(best[v].from);
      weight[v] = best[v].weight;
      for (auto [other, w] : pending[v])
        if (!in_tree[other]) offer(other, v, w);
      std::vector<std::pair<std::uint32_t, std::uint32_t>>().swap(pending[v]);
    }
  }

  for (SetIndex i = 0; i < s; ++i) {
    g.edges[i] = materialize(family, index, i, g.edges[i].parent);
    g.total_weight += g.edges[i].weight();
    g.max_edge_weight = std::max(g.max_edge_weight, g.edges[i].weight());
  }
  return g;
}

InsertionGraph build_insertion_graph(const SetFamily& family, const LcpIndex& index) {
  const SetIndex s = family.size();
  InsertionGraph g;
  g.u = family.u;
  g.edges.resize(s);

  std::vector<SetIndex> order(s);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](SetIndex x, SetIndex y) { return family.sets[x].size() < family.sets[y].size(); });

  struct Entry {
    SetIndex other;
    DiffIterator it;
  };
  std::vector<Entry> bag;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const SetIndex set = order[pos];
    bag.clear();
    for (std::size_t q = 0; q < pos; ++q) bag.push_back({order[q], DiffIterator(index, set, order[q])});

    GraphNode parent = GraphNode::empty_root();
    while (!bag.empty()) {
      std::optional<SetIndex> finished;
      for (std::size_t i = 0; i < bag.size();) {
        auto& e = bag[i];
        ++g.advances;
        auto d = e.it.advance(index);
        bool drop;
        if (!d) {
          // count() == 0 means an equal set, which is not a strict subset.
          if (e.it.count() > 0 && (!finished || e.other < *finished)) finished = e.other;
          drop = true;
        } else {
          drop = d->side == Side::b;  // element of S' missing from S
        }
        if (drop) {
          e = std::move(bag.back());
          bag.pop_back();
        } else {
          ++i;
        }
      }
      if (finished) {
        parent = GraphNode::of_set(*finished);
        break;
      }
    }

    auto& edge = g.edges[set];
    edge.parent = parent;
    if (parent.is_empty_root()) {
      edge.insertions = family.sets[set];
    } else {
      for (const auto& d : diff_full(index, set, parent.set())) edge.insertions.push_back(d.value);
    }
    g.total_weight += edge.weight();
    g.max_edge_weight = std::max(g.max_edge_weight, edge.weight());
  }
  return g;
}

std::vector<SetIndex> topological_order(const std::vector<ParentEdge>& edges) {
  const auto s = static_cast<SetIndex>(edges.size());
  // 0 = unvisited, 1 = on the current chain, 2 = placed
  std::vector<std::uint8_t> state(s, 0);
  std::vector<SetIndex> order;
  order.reserve(s);
  std::vector<SetIndex> chain;
  for (SetIndex start = 0; start < s; ++start) {
    SetIndex v = start;
    while (state[v] == 0) {
      state[v] = 1;
      chain.push_back(v);
      const auto p = edges[v].parent;
      if (!p.is_set()) break;
      if (p.set() >= s) throw std::invalid_argument("parent refers to a missing set");
      if (state[p.set()] == 1) throw std::invalid_argument("parent pointers contain a cycle");
      v = p.set();
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      state[*it] = 2;
      order.push_back(*it);
    }
    chain.clear();
  }
  return order;
}

TreeSplit split_two_trees(const std::vector<ParentEdge>& edges) {
  TreeSplit split;
  split.empty_tree.push_back(GraphNode::empty_root());
  split.univ_tree.push_back(GraphNode::univ_root());
  std::vector<GraphNode> root(edges.size());
  for (SetIndex v : topological_order(edges)) {
    const auto p = edges[v].parent;
    root[v] = p.is_set() ? root[p.set()] : p;
    (root[v].is_empty_root() ? split.empty_tree : split.univ_tree).push_back(GraphNode::of_set(v));
  }
  return split;
}

std::vector<std::vector<Element>> replay(const std::vector<ParentEdge>& edges, Element u) {
  std::vector<std::vector<Element>> sets(edges.size());
  std::vector<Element> universe(u);
  std::iota(universe.begin(), universe.end(), 1u);
  for (SetIndex v : topological_order(edges)) {
    const auto& e = edges[v];
    const auto& base = e.parent.is_empty_root() ? std::vector<Element>{}
                       : e.parent.is_univ_root() ? universe
                                                 : sets[e.parent.set()];
    std::vector<Element> kept;
    std::set_difference(base.begin(), base.end(), e.deletions.begin(), e.deletions.end(),
                        std::back_inserter(kept));
    std::set_union(kept.begin(), kept.end(), e.insertions.begin(), e.insertions.end(),
                   std::back_inserter(sets[v]));
  }
  return sets;
}

}  // namespace sdst
