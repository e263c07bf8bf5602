#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sdst/indel_store.hpp"
#include "sdst/insertion_store.hpp"
#include "sdst/oracle.hpp"
#include "sdst/set_family.hpp"

namespace sdst {

enum class StoreKind : std::uint8_t { insertion = 0, symdiff = 1 };

const char* to_string(StoreKind kind);

struct PredSucc {
  std::optional<Element> pred;
  std::optional<Element> succ;
};

struct BuildReport {
  double seconds = 0;
  std::uint64_t advances = 0;  // iterator advances during graph construction
};

// A family of sets stored as an insertion tree or as indel trees, together
// with the token table of its universe. Immutable once built.
class CompressedStore {
 public:
  static CompressedStore build(const SetFamily& family, StoreKind kind, BuildReport* report = nullptr);

  CompressedStore(InsertionGraph graph, TokenMap tokens);
  CompressedStore(SymdiffGraph graph, TokenMap tokens);
  // From bare edges, as read back from disk.
  CompressedStore(StoreKind kind, std::vector<ParentEdge> edges, Element u, TokenMap tokens);

  StoreKind kind() const { return static_cast<StoreKind>(backend_.index()); }
  SetIndex size() const;
  Element universe() const;
  const TokenMap& tokens() const { return tokens_; }
  const std::vector<ParentEdge>& edges() const;

  // Δ(S) or I(S), and the largest single edge weight.
  std::uint64_t weight() const { return weight_; }
  std::uint64_t max_edge_weight() const { return max_edge_weight_; }
  std::uint64_t total_elements() const { return total_elements_; }
  // Nodes over all trees: 1 + I(S) or Δ(S) + 2.
  std::size_t node_count() const;

  // All queries throw std::out_of_range for an unknown set or an argument
  // outside its domain.
  bool member(SetIndex set, Element x) const;
  std::uint64_t rank(SetIndex set, Element x) const;
  Element access(SetIndex set, std::uint64_t i, DescentCounter* counter = nullptr) const;
  PredSucc pred_succ(SetIndex set, Element x) const;
  std::uint64_t cardinality(SetIndex set) const;
  std::vector<Element> reconstruct(SetIndex set) const;
  Answer query(SetIndex set, QueryKind kind, std::uint64_t arg) const;

  const InsertionStore* insertion() const { return std::get_if<InsertionStore>(&backend_); }
  const IndelStore* indel() const { return std::get_if<IndelStore>(&backend_); }

  void serialize(std::ostream& out) const;
  std::string serialize() const;
  // Throws FormatError on a bad magic, version, truncation or inconsistent
  // content.
  static CompressedStore deserialize(std::istream& in);
  static CompressedStore deserialize(std::string_view bytes);

 private:
  void check_set(SetIndex set) const;
  void summarize();

  std::variant<InsertionStore, IndelStore> backend_;
  TokenMap tokens_;
  std::uint64_t weight_ = 0;
  std::uint64_t max_edge_weight_ = 0;
  std::uint64_t total_elements_ = 0;
};

}  // namespace sdst
