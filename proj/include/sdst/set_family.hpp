#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdst/types.hpp"

namespace sdst {

// Bijection between original input tokens and dense element ids 1..u.
// Tokens are ordered numerically when every token is a non-negative integer,
// lexicographically (bytewise) otherwise.
class TokenMap {
 public:
  TokenMap() = default;

  // Values must be strictly increasing.
  static TokenMap numeric(std::vector<std::uint64_t> values);
  // Tokens must be strictly increasing in bytewise order.
  static TokenMap lexicographic(std::vector<std::string> tokens);

  bool is_numeric() const { return numeric_; }
  Element size() const { return static_cast<Element>(tokens_.size()); }

  // Original token of id; throws std::out_of_range unless 1 <= id <= u.
  const std::string& token(Element id) const;

  // Dense id of a token, if it belongs to the universe.
  std::optional<Element> find(std::string_view token) const;

  // Number of universe tokens ordered at or before `token` (0..u). The
  // token need not belong to the universe. Throws ParseError when a numeric
  // map is asked about a non-numeric token.
  Element floor_rank(std::string_view token) const;

 private:
  bool numeric_ = true;
  std::vector<std::string> tokens_;
  std::vector<std::uint64_t> values_;
};

// A family of s finite sets over the dense universe [1..u].
struct SetFamily {
  std::vector<std::vector<Element>> sets;  // each strictly increasing
  Element u = 0;                           // distinct elements in use
  std::uint64_t n = 0;                     // total element count
  TokenMap tokens;

  SetIndex size() const { return static_cast<SetIndex>(sets.size()); }

  // Maps raw integer sets (any order, duplicates allowed) onto [1..u].
  // Throws std::invalid_argument on an empty set.
  static SetFamily from_values(const std::vector<std::vector<std::uint64_t>>& raw);
};

// Throws std::logic_error if the family breaks a SetFamily invariant.
void validate(const SetFamily& family);

// One set per line, whitespace separated tokens; lines starting with '#'
// are skipped. Throws ParseError("empty family") when no set is present and
// ParseError("empty set not allowed in input") on a blank line.
SetFamily parse_family(std::istream& in);
SetFamily parse_family(const std::vector<std::string>& lines);

std::string unmap_element(const SetFamily& family, Element id);

// T(S) = S_1 $_1 S_2 $_2 ... S_s $_s with $_i = u + i.
struct ConcatText {
  std::vector<std::uint32_t> text;
  std::vector<std::uint32_t> starts;  // 0-based offset of each set
  Element u = 0;

  bool is_terminator(std::uint32_t symbol) const { return symbol > u; }
};

ConcatText build_concat_text(const SetFamily& family);

}  // namespace sdst
