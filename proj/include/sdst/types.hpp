#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sdst {

// Dense element id in [1..u]. 0 is never a valid element.
using Element = std::uint32_t;

// 0-based position of a set within its family.
using SetIndex = std::uint32_t;

// Malformed input text. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Serialized store could not be decoded.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A node of a symdiff or insertion graph: one of the two virtual roots
// (EMPTY, UNIV) or a member set. Ordering puts EMPTY < UNIV < sets, with sets
// ordered by index.
class GraphNode {
 public:
  constexpr GraphNode() = default;

  static constexpr GraphNode empty_root() { return GraphNode(0); }
  static constexpr GraphNode univ_root() { return GraphNode(1); }
  static constexpr GraphNode of_set(SetIndex i) { return GraphNode(i + 2); }
  static constexpr GraphNode from_raw(std::uint32_t raw) { return GraphNode(raw); }

  constexpr bool is_empty_root() const { return raw_ == 0; }
  constexpr bool is_univ_root() const { return raw_ == 1; }
  constexpr bool is_root() const { return raw_ < 2; }
  constexpr bool is_set() const { return raw_ >= 2; }
  constexpr SetIndex set() const { return raw_ - 2; }
  constexpr std::uint32_t raw() const { return raw_; }

  constexpr auto operator<=>(const GraphNode&) const = default;

  std::string to_string() const {
    if (is_empty_root()) return "EMPTY";
    if (is_univ_root()) return "UNIV";
    return "S" + std::to_string(set() + 1);
  }

 private:
  constexpr explicit GraphNode(std::uint32_t raw) : raw_(raw) {}
  std::uint32_t raw_ = 0;
};

}  // namespace sdst
