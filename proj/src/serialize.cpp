// Store file layout (all integers little-endian):
//
//   "SDST"            4 bytes magic
//   version           u16, currently 1
//   kind              u8, 0 = insertion, 1 = symdiff
//   u, s              u64 each
//   numeric           u8, 1 when tokens are ordered numerically
//   token table       u entries in id order: numeric maps store the gap to
//                     the previous value as a varint (first gap from 0);
//                     otherwise varint length followed by the bytes
//   per set           varint parent (0 = EMPTY, 1 = UNIV, 2 + i = set i),
//                     varint entry count, then the diff entries sorted by
//                     element as varint ((x - previous x) << 1 | is_deletion)
//
// Hierarchies and trees are not stored; they are rebuilt on load.

#include <algorithm>
#include <cstring>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "sdst/compressed_store.hpp"

namespace sdst {

namespace {

constexpr char kMagic[4] = {'S', 'D', 'S', 'T'};
constexpr std::uint16_t kVersion = 1;

class Writer {
 public:
  void bytes(const void* p, std::size_t n) { out_.append(static_cast<const char*>(p), n); }
  template <typename T>
  void fixed(T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) out_.push_back(static_cast<char>((std::uint64_t(v) >> (8 * i)) & 0xff));
  }
  void varint(std::uint64_t v) {
    while (v >= 0x80) {
      out_.push_back(static_cast<char>((v & 0x7f) | 0x80));
      v >>= 7;
    }
    out_.push_back(static_cast<char>(v));
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::size_t remaining() const { return in_.size() - pos_; }

  std::string_view bytes(std::size_t n) {
    need(n);
    auto v = in_.substr(pos_, n);
    pos_ += n;
    return v;
  }
  template <typename T>
  T fixed() {
    need(sizeof(T));
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= std::uint64_t(static_cast<unsigned char>(in_[pos_ + i])) << (8 * i);
    pos_ += sizeof(T);
    return static_cast<T>(v);
  }
  std::uint64_t varint() {
    std::uint64_t v = 0;
    for (unsigned shift = 0; shift < 64; shift += 7) {
      need(1);
      const auto b = static_cast<unsigned char>(in_[pos_++]);
      v |= std::uint64_t(b & 0x7f) << shift;
      if (!(b & 0x80)) return v;
    }
    throw FormatError("malformed varint");
  }

 private:
  void need(std::size_t n) const {
    if (remaining() < n) throw FormatError("truncated store stream");
  }
  std::string_view in_;
  std::size_t pos_ = 0;
};

// Replays the edges and rejects anything that would not describe sets.
void check_edges(const std::vector<ParentEdge>& edges, Element u, StoreKind kind) {
  std::vector<SetIndex> order;
  try {
    order = topological_order(edges);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  std::vector<std::vector<Element>> sets(edges.size());
  std::vector<Element> universe(u);
  for (Element x = 1; x <= u; ++x) universe[x - 1] = x;
  for (SetIndex v : order) {
    const auto& e = edges[v];
    if (kind == StoreKind::insertion && (e.parent.is_univ_root() || !e.deletions.empty()))
      throw FormatError("insertion store edge uses UNIV or deletions");
    const auto& base = e.parent.is_empty_root() ? std::vector<Element>{}
                       : e.parent.is_univ_root() ? universe
                                                 : sets[e.parent.set()];
    if (!std::includes(base.begin(), base.end(), e.deletions.begin(), e.deletions.end()))
      throw FormatError("edge deletes an element its parent lacks");
    std::vector<Element> kept;
    std::set_difference(base.begin(), base.end(), e.deletions.begin(), e.deletions.end(), std::back_inserter(kept));
    std::vector<Element> merged;
    std::set_union(kept.begin(), kept.end(), e.insertions.begin(), e.insertions.end(), std::back_inserter(merged));
    if (merged.size() != kept.size() + e.insertions.size())
      throw FormatError("edge inserts an element its parent already holds");
    if (merged.empty()) throw FormatError("stored set is empty");
    sets[v] = std::move(merged);
  }
}

}  // namespace

void CompressedStore::serialize(std::ostream& out) const {
  const auto bytes = serialize();
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string CompressedStore::serialize() const {
  Writer w;
  w.bytes(kMagic, sizeof(kMagic));
  w.fixed<std::uint16_t>(kVersion);
  w.fixed<std::uint8_t>(static_cast<std::uint8_t>(kind()));
  w.fixed<std::uint64_t>(universe());
  w.fixed<std::uint64_t>(size());
  w.fixed<std::uint8_t>(tokens_.is_numeric() ? 1 : 0);
  std::uint64_t previous = 0;
  for (Element id = 1; id <= tokens_.size(); ++id) {
    const auto& tok = tokens_.token(id);
    if (tokens_.is_numeric()) {
      const auto value = std::stoull(tok);
      w.varint(value - previous);
      previous = value;
    } else {
      w.varint(tok.size());
      w.bytes(tok.data(), tok.size());
    }
  }
  for (const auto& e : edges()) {
    w.varint(e.parent.raw());
    w.varint(e.weight());
    Element last = 0;
    auto ins = e.insertions.begin(), del = e.deletions.begin();
    while (ins != e.insertions.end() || del != e.deletions.end()) {
      const bool deletion = ins == e.insertions.end() || (del != e.deletions.end() && *del < *ins);
      const Element x = deletion ? *del++ : *ins++;
      w.varint((std::uint64_t(x - last) << 1) | (deletion ? 1 : 0));
      last = x;
    }
  }
  return w.take();
}

CompressedStore CompressedStore::deserialize(std::istream& in) {
  std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return deserialize(std::string_view(bytes));
}

CompressedStore CompressedStore::deserialize(std::string_view bytes) {
  Reader r(bytes);
  if (r.remaining() < sizeof(kMagic) + 2 || std::memcmp(r.bytes(sizeof(kMagic)).data(), kMagic, sizeof(kMagic)) != 0)
    throw FormatError("unsupported format");
  if (r.fixed<std::uint16_t>() != kVersion) throw FormatError("unsupported format");
  const auto kind_byte = r.fixed<std::uint8_t>();
  if (kind_byte > 1) throw FormatError("unsupported format");
  const auto kind = static_cast<StoreKind>(kind_byte);
  const auto u = r.fixed<std::uint64_t>();
  const auto s = r.fixed<std::uint64_t>();
  const auto numeric = r.fixed<std::uint8_t>();
  // Every token and every set takes at least one byte.
  if (u > r.remaining() || s > r.remaining() || numeric > 1) throw FormatError("corrupted header counts");

  TokenMap tokens;
  if (numeric) {
    std::vector<std::uint64_t> values;
    std::uint64_t value = 0;
    for (std::uint64_t i = 0; i < u; ++i) {
      const auto gap = r.varint();
      if (i > 0 && gap == 0) throw FormatError("token values are not increasing");
      value += gap;
      values.push_back(value);
    }
    tokens = TokenMap::numeric(std::move(values));
  } else {
    std::vector<std::string> names;
    for (std::uint64_t i = 0; i < u; ++i) {
      const auto len = r.varint();
      if (len > r.remaining()) throw FormatError("truncated store stream");
      names.emplace_back(r.bytes(len));
      if (i > 0 && !(names[i - 1] < names[i])) throw FormatError("tokens are not increasing");
    }
    tokens = TokenMap::lexicographic(std::move(names));
  }

  std::vector<ParentEdge> edges(s);
  for (std::uint64_t i = 0; i < s; ++i) {
    auto& e = edges[i];
    const auto parent = r.varint();
    if (parent >= s + 2 || parent == i + 2) throw FormatError("invalid parent reference");
    e.parent = GraphNode::from_raw(static_cast<std::uint32_t>(parent));
    const auto count = r.varint();
    if (count > r.remaining()) throw FormatError("corrupted diff length");
    std::uint64_t last = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
      const auto word = r.varint();
      const auto x = last + (word >> 1);
      if (x == last || x > u) throw FormatError("diff entry out of order or outside the universe");
      (word & 1 ? e.deletions : e.insertions).push_back(static_cast<Element>(x));
      last = x;
    }
  }
  if (r.remaining() != 0) throw FormatError("trailing bytes after store");

  check_edges(edges, static_cast<Element>(u), kind);
  return CompressedStore(kind, std::move(edges), static_cast<Element>(u), std::move(tokens));
}

}  // namespace sdst
