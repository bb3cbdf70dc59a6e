#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

namespace splitkit {

/// Dense index of an atom (sentence) or argument inside one framework.
using Id = std::uint32_t;
inline constexpr Id kNoId = std::numeric_limits<Id>::max();

/// Sorted, duplicate-free set of ids with value semantics.
///
/// Ordering is lexicographic on the sorted members, which is the canonical
/// order used for every emitted family of extensions.
class IdSet {
 public:
  IdSet() = default;
  IdSet(std::initializer_list<Id> ids) : ids_(ids) { normalize(); }
  explicit IdSet(std::vector<Id> ids) : ids_(std::move(ids)) { normalize(); }

  static IdSet range(Id n) {
    IdSet s;
    s.ids_.resize(n);
    for (Id i = 0; i < n; ++i) s.ids_[i] = i;
    return s;
  }

  bool contains(Id id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }
  void insert(Id id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) ids_.insert(it, id);
  }
  void erase(Id id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it != ids_.end() && *it == id) ids_.erase(it);
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  std::span<const Id> ids() const { return ids_; }
  Id front() const { return ids_.front(); }

  bool is_subset_of(const IdSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
  }
  bool intersects(const IdSet& other) const {
    auto a = ids_.begin(), b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
      if (*a == *b) return true;
      if (*a < *b) ++a; else ++b;
    }
    return false;
  }

  friend IdSet operator|(const IdSet& a, const IdSet& b) {
    IdSet r;
    r.ids_.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
  }
  friend IdSet operator&(const IdSet& a, const IdSet& b) {
    IdSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
  }
  friend IdSet operator-(const IdSet& a, const IdSet& b) {
    IdSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
  }
  IdSet& operator|=(const IdSet& b) { return *this = *this | b; }

  friend bool operator==(const IdSet&, const IdSet&) = default;
  friend auto operator<=>(const IdSet& a, const IdSet& b) { return a.ids_ <=> b.ids_; }

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<Id> ids_;
};

/// A family of sets, e.g. all extensions under some semantics.
using Family = std::vector<IdSet>;

/// Sorts and deduplicates a family into canonical order.
inline void canonicalize(Family& f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
}

inline bool family_contains(const Family& f, const IdSet& s) {
  return std::find(f.begin(), f.end(), s) != f.end();
}

/// Restricts an operation to a subset of indexed items (rules or attacks).
class IndexFilter {
 public:
  static IndexFilter all() { return IndexFilter{}; }
  static IndexFilter only(std::size_t count, std::span<const std::size_t> items) {
    IndexFilter f;
    f.restricted_ = true;
    f.mask_.assign(count, 0);
    for (std::size_t i : items) f.mask_.at(i) = 1;
    return f;
  }

  bool allows(std::size_t i) const { return !restricted_ || mask_[i]; }

 private:
  bool restricted_ = false;
  std::vector<char> mask_;
};

// Bit-level helpers for brute-force enumeration over at most 64 elements.
using Mask = std::uint64_t;

inline Mask mask_of(const IdSet& s, std::span<const int> index_of) {
  Mask m = 0;
  for (Id id : s) m |= Mask{1} << index_of[id];
  return m;
}

inline IdSet set_of(Mask m, std::span<const Id> members) {
  std::vector<Id> out;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (m >> i & 1U) out.push_back(members[i]);
  return IdSet(std::move(out));
}

}  // namespace splitkit
