#include "sdst/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

namespace sdst {

const char* to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::member: return "member";
    case QueryKind::access: return "access";
    case QueryKind::rank: return "rank";
    case QueryKind::pred: return "pred";
    case QueryKind::succ: return "succ";
  }
  return "?";
}

namespace oracle {

std::vector<Element> naive_symdiff(const std::vector<Element>& a, const std::vector<Element>& b) {
  std::vector<Element> out;
  for (Element x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  for (Element x : b)
    if (std::find(a.begin(), a.end(), x) == a.end()) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

bool member(const std::vector<Element>& set, Element x) {
  for (Element y : set)
    if (y == x) return true;
  return false;
}

std::uint64_t rank(const std::vector<Element>& set, Element x) {
  std::uint64_t r = 0;
  for (Element y : set)
    if (y <= x) ++r;
  return r;
}

Element access(const std::vector<Element>& set, std::uint64_t i) {
  if (i == 0 || i > set.size()) throw std::out_of_range("rank out of range");
  return set[i - 1];
}

std::optional<Element> pred(const std::vector<Element>& set, Element x) {
  std::optional<Element> best;
  for (Element y : set)
    if (y <= x) best = y;
  return best;
}

std::optional<Element> succ(const std::vector<Element>& set, Element x) {
  for (Element y : set)
    if (y >= x) return y;
  return std::nullopt;
}

Answer query(const SetFamily& family, SetIndex set, QueryKind kind, std::uint64_t arg) {
  const auto& s = family.sets.at(set);
  Answer a{kind, std::nullopt};
  auto x = static_cast<Element>(arg);
  switch (kind) {
    case QueryKind::member: a.value = member(s, x) ? 1 : 0; break;
    case QueryKind::access: a.value = access(s, arg); break;
    case QueryKind::rank: a.value = rank(s, x); break;
    case QueryKind::pred:
      if (auto p = pred(s, x)) a.value = *p;
      break;
    case QueryKind::succ:
      if (auto p = succ(s, x)) a.value = *p;
      break;
  }
  return a;
}

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> up;
  explicit DisjointSets(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[b] = a;
    return true;
  }
};

}  // namespace

MstResult mst(const SetFamily& family) {
  const std::uint32_t nodes = family.size() + 2;
  auto weight_of = [&](GraphNode a, GraphNode b) -> std::uint64_t {
    if (a.is_root() && b.is_root()) return 0;
    if (a.is_empty_root()) return family.sets[b.set()].size();
    if (a.is_univ_root()) return family.u - family.sets[b.set()].size();
    return naive_symdiff(family.sets[a.set()], family.sets[b.set()]).size();
  };

  struct Edge {
    std::uint64_t w;
    std::uint32_t a, b;
  };
  std::vector<Edge> edges;
  for (std::uint32_t a = 0; a < nodes; ++a)
    for (std::uint32_t b = a + 1; b < nodes; ++b)
      edges.push_back({weight_of(GraphNode::from_raw(a), GraphNode::from_raw(b)), a, b});
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.w, x.a, x.b) < std::tie(y.w, y.a, y.b); });

  DisjointSets dsu(nodes);
  std::vector<std::vector<std::uint32_t>> adj(nodes);
  MstResult result;
  for (const auto& e : edges) {
    if (!dsu.unite(e.a, e.b)) continue;
    result.total_weight += e.w;
    if (e.a <= 1 && e.b <= 1) continue;  // the EMPTY-UNIV edge splits the two trees
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }

  // Orient away from the roots.
  result.parent.assign(family.size(), GraphNode::empty_root());
  std::vector<bool> seen(nodes, false);
  std::queue<std::uint32_t> frontier;
  for (std::uint32_t root : {0u, 1u}) {
    seen[root] = true;
    frontier.push(root);
  }
  while (!frontier.empty()) {
    auto v = frontier.front();
    frontier.pop();
    for (auto w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      result.parent[w - 2] = GraphNode::from_raw(v);
      frontier.push(w);
    }
  }
  return result;
}

GraphNode insertion_parent(const SetFamily& family, SetIndex set) {
  const auto& s = family.sets.at(set);
  GraphNode best = GraphNode::empty_root();
  std::size_t best_size = 0;
  for (SetIndex j = 0; j < family.size(); ++j) {
    const auto& t = family.sets[j];
    if (t.size() >= s.size()) continue;
    bool subset = std::all_of(t.begin(), t.end(), [&](Element x) { return member(s, x); });
    if (subset && t.size() > best_size) {
      best = GraphNode::of_set(j);
      best_size = t.size();
    }
  }
  return best;
}

std::uint64_t insertion_compressibility(const SetFamily& family) {
  std::uint64_t total = 0;
  for (SetIndex i = 0; i < family.size(); ++i) {
    auto p = insertion_parent(family, i);
    total += family.sets[i].size() - (p.is_set() ? family.sets[p.set()].size() : 0);
  }
  return total;
}

}  // namespace oracle
}  // namespace sdst
