// Hash set of fixed-width elements stored in a flat arena.
#pragma once

#include <cstdint>
#include <cstring>
#include <optional>
#include <vector>

#include "growthlab/group.hpp"

namespace growthlab {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_coords(const Int* a, std::size_t n) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL ^ n;
  for (std::size_t i = 0; i < n; ++i) h = mix64(h ^ static_cast<std::uint64_t>(a[i]));
  return h;
}

/// Open-addressing table of ids; equality is supplied by the caller.
class IdTable {
 public:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  explicit IdTable(std::size_t expected = 16) { rebuild(expected); }

  /// Returns the slot index holding a matching id, or the empty slot where it belongs.
  template <class Eq>
  std::size_t probe(std::uint64_t hash, Eq&& eq) const {
    std::size_t mask = ids_.size() - 1;
    std::size_t i = hash & mask;
    while (ids_[i] != kEmpty) {
      if (hashes_[i] == hash && eq(ids_[i])) return i;
      i = (i + 1) & mask;
    }
    return i;
  }

  std::uint64_t id_at(std::size_t slot) const { return ids_[slot]; }
  void set_id(std::size_t slot, std::uint64_t id) { ids_[slot] = id; }

  void put(std::size_t slot, std::uint64_t hash, std::uint64_t id) {
    ids_[slot] = id;
    hashes_[slot] = hash;
    if (++count_ * 2 > ids_.size()) grow();
  }

  std::size_t size() const { return count_; }

 private:
  void rebuild(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    ids_.assign(cap, kEmpty);
    hashes_.assign(cap, 0);
  }
  void grow() {
    auto ids = std::move(ids_);
    auto hashes = std::move(hashes_);
    rebuild(ids.size());
    std::size_t mask = ids_.size() - 1;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (ids[k] == kEmpty) continue;
      std::size_t i = hashes[k] & mask;
      while (ids_[i] != kEmpty) i = (i + 1) & mask;
      ids_[i] = ids[k];
      hashes_[i] = hashes[k];
    }
  }

  std::vector<std::uint64_t> ids_;
  std::vector<std::uint64_t> hashes_;
  std::size_t count_ = 0;
};

/// Insertion-ordered set of elements of one fixed width, hashed into independent shards.
class ElementSet {
 public:
  static constexpr unsigned kShardBits = 4;
  static constexpr std::size_t kShards = std::size_t{1} << kShardBits;

  explicit ElementSet(std::size_t width = 1) : width_(width), tables_(kShards) {}

  static std::size_t shard_of(std::uint64_t h) { return static_cast<std::size_t>(h >> (64 - kShardBits)); }

  std::size_t width() const { return width_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  const Int* at(std::size_t i) const { return data_.data() + i * width_; }
  Element element(std::size_t i) const { return Element(at(i), at(i) + width_); }

  std::optional<std::size_t> find(const Int* e) const { return find(e, hash_coords(e, width_)); }
  std::optional<std::size_t> find(const Int* e, std::uint64_t h) const {
    const IdTable& t = tables_[shard_of(h)];
    std::size_t slot = t.probe(h, [&](std::uint64_t id) { return equal(at(id), e); });
    if (t.id_at(slot) == IdTable::kEmpty) return std::nullopt;
    return t.id_at(slot);
  }
  bool contains(const Element& e) const { return find(e.data()).has_value(); }

  /// Inserts and returns (id, inserted).
  std::pair<std::size_t, bool> insert(const Int* e) { return insert(e, hash_coords(e, width_)); }
  std::pair<std::size_t, bool> insert(const Int* e, std::uint64_t h) {
    IdTable& t = tables_[shard_of(h)];
    std::size_t slot = t.probe(h, [&](std::uint64_t id) { return equal(at(id), e); });
    if (t.id_at(slot) != IdTable::kEmpty) return {t.id_at(slot), false};
    std::size_t id = size_++;
    data_.insert(data_.end(), e, e + width_);
    t.put(slot, h, id);
    return {id, true};
  }
  std::pair<std::size_t, bool> insert(const Element& e) { return insert(e.data()); }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(element(i));
    return out;
  }

  bool equal(const Int* a, const Int* b) const { return std::memcmp(a, b, width_ * sizeof(Int)) == 0; }

  // Low-level access for bulk kernels that fill shards concurrently.
  IdTable& shard(std::size_t s) { return tables_[s]; }
  void append_raw(const Int* e) {
    data_.insert(data_.end(), e, e + width_);
    ++size_;
  }

 private:
  std::size_t width_;
  std::vector<Int> data_;
  std::vector<IdTable> tables_;
  std::size_t size_ = 0;
};

}  // namespace growthlab
