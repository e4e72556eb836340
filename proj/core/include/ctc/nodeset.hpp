#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "ctc/error.hpp"

namespace ctc {

using NodeId = int;

/// Set of node indices, packed into a 64-bit word. Graphs in this library
/// are desk-scale; 64 nodes is a hard cap enforced at graph construction.
class NodeSet {
 public:
  static constexpr int kMaxNodes = 64;

  constexpr NodeSet() = default;

  static constexpr NodeSet from_bits(uint64_t bits) { return NodeSet(bits); }

  static constexpr NodeSet universe(int n) {
    return NodeSet(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }

  static constexpr NodeSet single(NodeId i) { return NodeSet(uint64_t{1} << i); }

  static NodeSet of(std::initializer_list<NodeId> ids) {
    NodeSet s;
    for (NodeId i : ids) s.insert(i);
    return s;
  }

  constexpr bool contains(NodeId i) const { return (bits_ >> i) & 1; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr uint64_t bits() const { return bits_; }

  NodeSet& insert(NodeId i) {
    assert(i >= 0 && i < kMaxNodes);
    bits_ |= uint64_t{1} << i;
    return *this;
  }

  NodeSet& erase(NodeId i) {
    bits_ &= ~(uint64_t{1} << i);
    return *this;
  }

  constexpr bool subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(NodeSet other) const { return (bits_ & other.bits_) != 0; }

  /// Lowest member; the set must be nonempty.
  NodeId min() const {
    assert(bits_ != 0);
    return std::countr_zero(bits_);
  }

  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.bits_ | b.bits_); }
  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & b.bits_); }
  friend constexpr NodeSet operator-(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & ~b.bits_); }
  NodeSet& operator|=(NodeSet b) { bits_ |= b.bits_; return *this; }
  NodeSet& operator&=(NodeSet b) { bits_ &= b.bits_; return *this; }
  NodeSet& operator-=(NodeSet b) { bits_ &= ~b.bits_; return *this; }
  constexpr bool operator==(const NodeSet&) const = default;

  std::vector<NodeId> to_vector() const {
    std::vector<NodeId> v;
    v.reserve(static_cast<size_t>(size()));
    for (NodeId i : *this) v.push_back(i);
    return v;
  }

  class iterator {
   public:
    explicit constexpr iterator(uint64_t rest) : rest_(rest) {}
    constexpr NodeId operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    uint64_t rest_;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  explicit constexpr NodeSet(uint64_t bits) : bits_(bits) {}
  uint64_t bits_ = 0;
};

/// Calls `fn(NodeSet)` for every subset of `universe` with at most `max_size`
/// members, ordered by size ascending and lexicographically on the sorted
/// element list within each size (the empty set comes first). Stops early and
/// returns the subset if `fn` returns true.
template <class F>
std::optional<NodeSet> find_subset(NodeSet universe, int max_size, F&& fn) {
  const std::vector<NodeId> elems = universe.to_vector();
  const int m = static_cast<int>(elems.size());
  if (max_size > m) max_size = m;
  if (max_size < 0) max_size = 0;
  for (int k = 0; k <= max_size; ++k) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      NodeSet s;
      for (int i : idx) s.insert(elems[static_cast<size_t>(i)]);
      if (fn(s)) return s;
      if (k == 0) break;
      int pos = k - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - k + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < k; ++i)
        idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
    }
  }
  return std::nullopt;
}

template <class F>
void for_each_subset(NodeSet universe, int max_size, F&& fn) {
  find_subset(universe, max_size, [&](NodeSet s) {
    fn(s);
    return false;
  });
}

}  // namespace ctc
