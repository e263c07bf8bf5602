#include "sdst/set_family.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

namespace sdst {

namespace {

std::optional<std::uint64_t> parse_unsigned(std::string_view token) {
  if (token.empty() || token.front() < '0' || token.front() > '9') return std::nullopt;
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

bool is_comment(std::string_view line) {
  auto first = line.find_first_not_of(" \t\r");
  return first != std::string_view::npos && line[first] == '#';
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(std::move(tok));
  return out;
}

}  // namespace

TokenMap TokenMap::numeric(std::vector<std::uint64_t> values) {
  TokenMap map;
  map.numeric_ = true;
  map.tokens_.reserve(values.size());
  for (auto v : values) map.tokens_.push_back(std::to_string(v));
  map.values_ = std::move(values);
  return map;
}

TokenMap TokenMap::lexicographic(std::vector<std::string> tokens) {
  TokenMap map;
  map.numeric_ = false;
  map.tokens_ = std::move(tokens);
  return map;
}

const std::string& TokenMap::token(Element id) const {
  if (id == 0 || id > tokens_.size())
    throw std::out_of_range("element id " + std::to_string(id) + " outside [1.." +
                            std::to_string(tokens_.size()) + "]");
  return tokens_[id - 1];
}

std::optional<Element> TokenMap::find(std::string_view token) const {
  if (numeric_) {
    auto v = parse_unsigned(token);
    if (!v) return std::nullopt;
    auto it = std::lower_bound(values_.begin(), values_.end(), *v);
    if (it == values_.end() || *it != *v) return std::nullopt;
    return static_cast<Element>(it - values_.begin() + 1);
  }
  auto it = std::lower_bound(tokens_.begin(), tokens_.end(), token);
  if (it == tokens_.end() || *it != token) return std::nullopt;
  return static_cast<Element>(it - tokens_.begin() + 1);
}

Element TokenMap::floor_rank(std::string_view token) const {
  if (numeric_) {
    auto v = parse_unsigned(token);
    if (!v) throw ParseError("token '" + std::string(token) + "' is not comparable with a numeric universe");
    return static_cast<Element>(std::upper_bound(values_.begin(), values_.end(), *v) - values_.begin());
  }
  return static_cast<Element>(std::upper_bound(tokens_.begin(), tokens_.end(), token) - tokens_.begin());
}

SetFamily SetFamily::from_values(const std::vector<std::vector<std::uint64_t>>& raw) {
  std::vector<std::uint64_t> universe;
  for (const auto& set : raw) {
    if (set.empty()) throw std::invalid_argument("empty set not allowed in input");
    universe.insert(universe.end(), set.begin(), set.end());
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

  SetFamily family;
  family.u = static_cast<Element>(universe.size());
  family.sets.reserve(raw.size());
  for (const auto& set : raw) {
    std::vector<Element> ids;
    ids.reserve(set.size());
    for (auto v : set)
      ids.push_back(static_cast<Element>(std::lower_bound(universe.begin(), universe.end(), v) -
                                         universe.begin() + 1));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    family.n += ids.size();
    family.sets.push_back(std::move(ids));
  }
  family.tokens = TokenMap::numeric(std::move(universe));
  return family;
}

void validate(const SetFamily& family) {
  std::vector<bool> seen(std::size_t(family.u) + 1, false);
  std::uint64_t n = 0;
  for (const auto& set : family.sets) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] == 0 || set[i] > family.u) throw std::logic_error("element id outside [1..u]");
      if (i && set[i - 1] >= set[i]) throw std::logic_error("set is not strictly increasing");
      seen[set[i]] = true;
    }
    n += set.size();
  }
  if (n != family.n) throw std::logic_error("n does not match the sum of set sizes");
  if (std::count(seen.begin() + 1, seen.end(), true) != static_cast<std::ptrdiff_t>(family.u))
    throw std::logic_error("u does not match the number of distinct elements");
  if (family.tokens.size() != family.u) throw std::logic_error("token map size differs from u");
}

SetFamily parse_family(const std::vector<std::string>& lines) {
  std::vector<std::vector<std::string>> raw;
  bool all_numeric = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_comment(lines[i])) continue;
    auto tokens = split_tokens(lines[i]);
    if (tokens.empty()) throw ParseError("empty set not allowed in input", i + 1);
    for (const auto& t : tokens)
      if (all_numeric && !parse_unsigned(t)) all_numeric = false;
    raw.push_back(std::move(tokens));
  }
  if (raw.empty()) throw ParseError("empty family");

  if (all_numeric) {
    std::vector<std::vector<std::uint64_t>> values;
    values.reserve(raw.size());
    for (const auto& tokens : raw) {
      auto& set = values.emplace_back();
      for (const auto& t : tokens) set.push_back(*parse_unsigned(t));
    }
    return SetFamily::from_values(values);
  }

  std::vector<std::string> universe;
  for (const auto& tokens : raw) universe.insert(universe.end(), tokens.begin(), tokens.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

  SetFamily family;
  family.u = static_cast<Element>(universe.size());
  for (const auto& tokens : raw) {
    std::vector<Element> ids;
    for (const auto& t : tokens)
      ids.push_back(static_cast<Element>(std::lower_bound(universe.begin(), universe.end(), t) -
                                         universe.begin() + 1));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    family.n += ids.size();
    family.sets.push_back(std::move(ids));
  }
  family.tokens = TokenMap::lexicographic(std::move(universe));
  return family;
}

SetFamily parse_family(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(std::move(line));
  // A trailing newline does not open a new (empty) set.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return parse_family(lines);
}

std::string unmap_element(const SetFamily& family, Element id) { return family.tokens.token(id); }

ConcatText build_concat_text(const SetFamily& family) {
  ConcatText t;
  t.u = family.u;
  t.text.reserve(family.n + family.sets.size());
  t.starts.reserve(family.sets.size());
  for (SetIndex i = 0; i < family.size(); ++i) {
    t.starts.push_back(static_cast<std::uint32_t>(t.text.size()));
    t.text.insert(t.text.end(), family.sets[i].begin(), family.sets[i].end());
    t.text.push_back(family.u + i + 1);
  }
  return t;
}

}  // namespace sdst
