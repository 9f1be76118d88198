#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdiff {

using Vertex = int;

/// Maximum number of vertices of any graph handled by the library. A vertex
/// set is a single machine word, so every set operation is one instruction.
inline constexpr int kCapacity = 64;

/// A subset of {0, ..., kCapacity - 1} stored as a 64-bit mask.
///
/// Sets are ordered shortlex: by cardinality first, then by the sorted member
/// sequence. Every solver breaks ties by returning the smallest set in this
/// order, so witnesses are reproducible.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }

  /// {0, ..., n - 1}
  static constexpr VertexSet range(int n) {
    if (n < 0 || n > kCapacity) throw std::out_of_range("VertexSet::range: n outside [0, capacity]");
    return from_bits(n == kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static constexpr VertexSet singleton(Vertex v) {
    check_index(v);
    return from_bits(std::uint64_t{1} << v);
  }

  template <class Range>
  static VertexSet from_range(const Range& members) {
    VertexSet s;
    for (Vertex v : members) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(Vertex v) const {
    return v >= 0 && v < kCapacity && ((bits_ >> v) & 1U) != 0;
  }
  constexpr void insert(Vertex v) {
    check_index(v);
    bits_ |= std::uint64_t{1} << v;
  }
  constexpr void erase(Vertex v) {
    check_index(v);
    bits_ &= ~(std::uint64_t{1} << v);
  }
  constexpr VertexSet with(Vertex v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  constexpr VertexSet without(Vertex v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  /// Smallest member; the set must be non-empty.
  constexpr Vertex front() const {
    if (bits_ == 0) throw std::logic_error("VertexSet::front on empty set");
    return std::countr_zero(bits_);
  }
  /// Largest member, or -1 for the empty set.
  constexpr Vertex back_or_none() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  /// Complement relative to the ambient vertex set {0, ..., n - 1}.
  constexpr VertexSet complement(int n) const { return from_bits(range(n).bits_ & ~bits_); }

  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }

  constexpr bool operator==(const VertexSet&) const = default;

  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    // The lowest differing member decides: whoever holds it comes first.
    std::uint64_t first_diff = (a.bits_ ^ b.bits_) & ~((a.bits_ ^ b.bits_) - 1);
    return (a.bits_ & first_diff) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  /// "{0,2,5}"
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : *this) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

 private:
  static constexpr void check_index(Vertex v) {
    if (v < 0 || v >= kCapacity) throw std::out_of_range("vertex index outside capacity");
  }

  std::uint64_t bits_ = 0;
};

}  // namespace gdiff
