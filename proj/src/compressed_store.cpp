#include "sdst/compressed_store.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "sdst/lcp_index.hpp"

namespace sdst {

const char* to_string(StoreKind kind) { return kind == StoreKind::insertion ? "insertion" : "symdiff"; }

CompressedStore CompressedStore::build(const SetFamily& family, StoreKind kind, BuildReport* report) {
  const auto start = std::chrono::steady_clock::now();
  LcpIndex index(build_concat_text(family));
  auto finish = [&](auto graph) {
    const auto advances = graph.advances;
    CompressedStore store(std::move(graph), family.tokens);
    if (report) {
      report->advances = advances;
      report->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return store;
  };
  if (kind == StoreKind::insertion) return finish(build_insertion_graph(family, index));
  return finish(build_symdiff_graph(family, index));
}

CompressedStore::CompressedStore(InsertionGraph graph, TokenMap tokens)
    : backend_(std::in_place_type<InsertionStore>, std::move(graph.edges), graph.u), tokens_(std::move(tokens)) {
  summarize();
}

CompressedStore::CompressedStore(SymdiffGraph graph, TokenMap tokens)
    : backend_(std::in_place_type<IndelStore>, std::move(graph.edges), graph.u), tokens_(std::move(tokens)) {
  summarize();
}

CompressedStore::CompressedStore(StoreKind kind, std::vector<ParentEdge> edges, Element u, TokenMap tokens)
    : backend_(kind == StoreKind::insertion
                   ? decltype(backend_)(std::in_place_type<InsertionStore>, std::move(edges), u)
                   : decltype(backend_)(std::in_place_type<IndelStore>, std::move(edges), u)),
      tokens_(std::move(tokens)) {
  summarize();
}

void CompressedStore::summarize() {
  weight_ = max_edge_weight_ = total_elements_ = 0;
  for (const auto& e : edges()) {
    weight_ += e.weight();
    max_edge_weight_ = std::max(max_edge_weight_, e.weight());
  }
  for (SetIndex i = 0; i < size(); ++i) total_elements_ += cardinality(i);
}

SetIndex CompressedStore::size() const {
  return std::visit([](const auto& s) { return s.size(); }, backend_);
}

Element CompressedStore::universe() const {
  return std::visit([](const auto& s) { return s.universe(); }, backend_);
}

const std::vector<ParentEdge>& CompressedStore::edges() const {
  return std::visit([](const auto& s) -> const std::vector<ParentEdge>& { return s.edges(); }, backend_);
}

std::size_t CompressedStore::node_count() const {
  if (auto* s = insertion()) return s->tree().size();
  return indel()->node_count();
}

void CompressedStore::check_set(SetIndex set) const {
  if (set >= size()) throw std::out_of_range("unknown set " + std::to_string(set + 1));
}

bool CompressedStore::member(SetIndex set, Element x) const {
  check_set(set);
  return std::visit([&](const auto& s) { return s.member(set, x); }, backend_);
}

std::uint64_t CompressedStore::rank(SetIndex set, Element x) const {
  check_set(set);
  return std::visit([&](const auto& s) { return s.rank(set, x); }, backend_);
}

Element CompressedStore::access(SetIndex set, std::uint64_t i, DescentCounter* counter) const {
  check_set(set);
  return std::visit([&](const auto& s) { return s.access(set, i, counter); }, backend_);
}

std::uint64_t CompressedStore::cardinality(SetIndex set) const {
  check_set(set);
  return std::visit([&](const auto& s) { return s.cardinality(set); }, backend_);
}

PredSucc CompressedStore::pred_succ(SetIndex set, Element x) const {
  if (x < 1 || x > universe()) throw std::out_of_range("element " + std::to_string(x) + " out of range");
  const auto i = rank(set, x);
  PredSucc r;
  if (i > 0) r.pred = access(set, i);
  if (r.pred == x)
    r.succ = x;
  else if (i < cardinality(set))
    r.succ = access(set, i + 1);
  return r;
}

std::vector<Element> CompressedStore::reconstruct(SetIndex set) const {
  const auto c = cardinality(set);
  std::vector<Element> out;
  out.reserve(c);
  for (std::uint64_t i = 1; i <= c; ++i) out.push_back(access(set, i));
  return out;
}

Answer CompressedStore::query(SetIndex set, QueryKind kind, std::uint64_t arg) const {
  Answer a{kind, std::nullopt};
  const auto x = static_cast<Element>(arg);
  switch (kind) {
    case QueryKind::member: a.value = member(set, x) ? 1 : 0; break;
    case QueryKind::access: a.value = access(set, arg); break;
    case QueryKind::rank: a.value = rank(set, x); break;
    case QueryKind::pred:
      if (auto p = pred_succ(set, x).pred) a.value = *p;
      break;
    case QueryKind::succ:
      if (auto p = pred_succ(set, x).succ) a.value = *p;
      break;
  }
  return a;
}

}  // namespace sdst
