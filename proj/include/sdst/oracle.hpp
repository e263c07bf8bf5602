#pragma once

// Brute-force reference answers. Everything here works directly on the
// sorted sets with linear scans and a Kruskal MST; nothing is shared with the
// compressed path.

#include <cstdint>
#include <optional>
#include <vector>

#include "sdst/set_family.hpp"

namespace sdst {

enum class QueryKind : std::uint8_t { member, access, rank, pred, succ };

const char* to_string(QueryKind kind);

// member: value 0/1. rank: the count. access/pred/succ: the element, or
// nullopt for NONE.
struct Answer {
  QueryKind kind = QueryKind::member;
  std::optional<std::uint64_t> value;

  bool operator==(const Answer&) const = default;
};

namespace oracle {

std::vector<Element> naive_symdiff(const std::vector<Element>& a, const std::vector<Element>& b);

bool member(const std::vector<Element>& set, Element x);
std::uint64_t rank(const std::vector<Element>& set, Element x);
// Throws std::out_of_range("rank out of range") unless 1 <= i <= |set|.
Element access(const std::vector<Element>& set, std::uint64_t i);
std::optional<Element> pred(const std::vector<Element>& set, Element x);
std::optional<Element> succ(const std::vector<Element>& set, Element x);

// For access `arg` is the rank i, otherwise the element x.
Answer query(const SetFamily& family, SetIndex set, QueryKind kind, std::uint64_t arg);

struct MstResult {
  std::uint64_t total_weight = 0;
  std::vector<GraphNode> parent;  // per set
};

// Kruskal over S ∪ {EMPTY, UNIV}: w(S,S') = |S△S'|, w(S,EMPTY) = |S|,
// w(S,UNIV) = u - |S|, w(EMPTY,UNIV) = 0.
MstResult mst(const SetFamily& family);

// A largest strict subset of the set within the family, smallest index on
// ties; EMPTY when none exists.
GraphNode insertion_parent(const SetFamily& family, SetIndex set);

// Σ |S| - |p(S)| with p from insertion_parent.
std::uint64_t insertion_compressibility(const SetFamily& family);

}  // namespace oracle
}  // namespace sdst
