#include "sdst/lcp_index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sdst {

std::vector<std::uint32_t> build_suffix_array(const std::vector<std::uint32_t>& text) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> sa(n), rank(n), tmp(n);
  if (n == 0) return sa;

  // Initial ranks: dense order of the symbols.
  std::vector<std::uint32_t> symbols(text);
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  for (std::size_t i = 0; i < n; ++i)
    rank[i] = static_cast<std::uint32_t>(std::lower_bound(symbols.begin(), symbols.end(), text[i]) -
                                         symbols.begin());
  std::size_t classes = symbols.size();

  std::vector<std::uint32_t> count(std::max(classes, n) + 1);
  auto counting_sort = [&](const std::vector<std::uint32_t>& order) {
    std::fill(count.begin(), count.end(), 0);
    for (auto i : order) ++count[rank[i]];
    std::uint32_t sum = 0;
    for (auto& c : count) {
      auto c0 = c;
      c = sum;
      sum += c0;
    }
    for (auto i : order) sa[count[rank[i]]++] = i;
  };

  for (std::size_t i = 0; i < n; ++i) tmp[i] = static_cast<std::uint32_t>(i);
  counting_sort(tmp);

  for (std::size_t k = 1; classes < n; k <<= 1) {
    // Order by second key (rank[i + k], missing = smallest), then stable
    // counting sort by first key.
    std::size_t p = 0;
    for (std::size_t i = n - std::min(k, n); i < n; ++i) tmp[p++] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 0; j < n; ++j)
      if (sa[j] >= k) tmp[p++] = static_cast<std::uint32_t>(sa[j] - k);
    counting_sort(tmp);

    auto second = [&](std::uint32_t i) -> std::int64_t { return i + k < n ? rank[i + k] : -1; };
    tmp[sa[0]] = 0;
    std::uint32_t c = 0;
    for (std::size_t j = 1; j < n; ++j) {
      if (rank[sa[j]] != rank[sa[j - 1]] || second(sa[j]) != second(sa[j - 1])) ++c;
      tmp[sa[j]] = c;
    }
    rank.swap(tmp);
    classes = std::size_t(c) + 1;
  }
  return sa;
}

LcpIndex::LcpIndex(ConcatText text) : text_(std::move(text)) {
  const auto& t = text_.text;
  const std::size_t n = t.size();
  sa_ = build_suffix_array(t);
  inverse_.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) inverse_[sa_[r]] = static_cast<std::uint32_t>(r);

  // Kasai: lcp[r] = lcp(sa[r-1], sa[r]), lcp[0] = 0.
  std::vector<std::uint32_t> lcp(n, 0);
  std::uint32_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = inverse_[i];
    if (r == 0) {
      h = 0;
      continue;
    }
    std::size_t j = sa_[r - 1];
    while (i + h < n && j + h < n && t[i + h] == t[j + h]) ++h;
    lcp[r] = h;
    if (h) --h;
  }

  const unsigned levels = n ? std::bit_width(n) : 0;
  sparse_.reserve(levels);
  sparse_.push_back(std::move(lcp));
  for (unsigned k = 1; k < levels; ++k) {
    const auto& prev = sparse_[k - 1];
    const std::size_t half = std::size_t(1) << (k - 1);
    std::vector<std::uint32_t> cur(n - (std::size_t(1) << k) + 1);
    for (std::size_t r = 0; r < cur.size(); ++r) cur[r] = std::min(prev[r], prev[r + half]);
    sparse_.push_back(std::move(cur));
  }
}

std::uint32_t LcpIndex::lce(std::uint32_t i, std::uint32_t j) const {
  if (i == j) return static_cast<std::uint32_t>(size() - i);
  auto lo = inverse_[i], hi = inverse_[j];
  if (lo > hi) std::swap(lo, hi);
  ++lo;  // min over lcp[lo .. hi]
  const unsigned k = std::bit_width(hi - lo + 1u) - 1;
  return std::min(sparse_[k][lo], sparse_[k][hi + 1 - (1u << k)]);
}

DiffIterator::DiffIterator(const LcpIndex& index, SetIndex a, SetIndex b)
    : start_a_(index.set_start(a)),
      start_b_(index.set_start(b)),
      pa_(start_a_),
      pb_(start_b_) {}

std::optional<DiffElement> DiffIterator::advance(const LcpIndex& index) {
  if (done_) throw std::logic_error("iterator exhausted");
  // Same set on both sides: the suffixes coincide past the terminator.
  const std::uint32_t l = pa_ == pb_ ? 0 : (++lce_calls_, index.lce(pa_, pb_));
  const auto ca = index.symbol(pa_ + l), cb = index.symbol(pb_ + l);
  const Element u = index.universe();
  if (pa_ == pb_ || (ca > u && cb > u)) {
    done_ = true;
    return std::nullopt;
  }
  ++k_;
  if (ca < cb) {
    pa_ += l + 1;
    pb_ += l;
    last_ = ca;
    return DiffElement{ca, Side::a};
  }
  pa_ += l;
  pb_ += l + 1;
  last_ = cb;
  return DiffElement{cb, Side::b};
}

std::vector<DiffElement> diff_full(const LcpIndex& index, SetIndex a, SetIndex b) {
  std::vector<DiffElement> out;
  DiffIterator it(index, a, b);
  while (auto e = it.advance(index)) out.push_back(*e);
  return out;
}

}  // namespace sdst
