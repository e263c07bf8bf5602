#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sdst/set_family.hpp"

namespace sdst {

// Longest-common-extension queries over a ConcatText in O(1): suffix array,
// Kasai LCP array and a sparse-table RMQ over it.
class LcpIndex {
 public:
  LcpIndex() = default;
  explicit LcpIndex(ConcatText text);

  const ConcatText& text() const { return text_; }
  std::size_t size() const { return text_.text.size(); }
  std::uint32_t symbol(std::uint32_t pos) const { return text_.text[pos]; }
  std::uint32_t set_start(SetIndex i) const { return text_.starts[i]; }
  Element universe() const { return text_.u; }

  // Length of the common prefix of text[i..] and text[j..] (0-based).
  std::uint32_t lce(std::uint32_t i, std::uint32_t j) const;

  const std::vector<std::uint32_t>& suffix_array() const { return sa_; }

 private:
  ConcatText text_;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> inverse_;
  // sparse_[k][r] = min lcp_[r .. r + 2^k)
  std::vector<std::vector<std::uint32_t>> sparse_;
};

// Suffix array of an integer string by prefix doubling with radix passes.
std::vector<std::uint32_t> build_suffix_array(const std::vector<std::uint32_t>& text);

enum class Side : std::uint8_t { a, b };

struct DiffElement {
  Element value;
  Side side;  // which of the two sets holds it

  bool operator==(const DiffElement&) const = default;
};

// Enumerates A △ B in increasing order, one element per advance, using one
// lce query per advance. After k emitted elements there are exactly k
// elements of A △ B before the cursors; the advance after the last element
// reports DONE.
class DiffIterator {
 public:
  DiffIterator() = default;
  DiffIterator(const LcpIndex& index, SetIndex a, SetIndex b);

  // nullopt means DONE; then count() == |A △ B|. Throws std::logic_error
  // ("iterator exhausted") if called again after DONE.
  std::optional<DiffElement> advance(const LcpIndex& index);

  bool done() const { return done_; }
  std::uint32_t count() const { return k_; }
  // 1-based cursors relative to the start of each set.
  std::uint32_t cursor_a() const { return pa_ - start_a_ + 1; }
  std::uint32_t cursor_b() const { return pb_ - start_b_ + 1; }
  std::optional<Element> last() const { return last_ ? std::optional<Element>(last_) : std::nullopt; }
  std::uint32_t lce_calls() const { return lce_calls_; }

 private:
  std::uint32_t start_a_ = 0, start_b_ = 0;
  std::uint32_t pa_ = 0, pb_ = 0;
  std::uint32_t k_ = 0;
  Element last_ = 0;
  std::uint32_t lce_calls_ = 0;
  bool done_ = false;
};

// Runs a fresh iterator to completion.
std::vector<DiffElement> diff_full(const LcpIndex& index, SetIndex a, SetIndex b);

}  // namespace sdst
