#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ctk {

/// Subset of the elements 0..63 of a finite poset, stored as a bitmask.
class ElementSet {
 public:
  using Mask = std::uint64_t;
  static constexpr int kCapacity = 64;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Mask bits) : bits_(bits) {}
  ElementSet(std::initializer_list<int> elements) {
    for (int x : elements) insert(x);
  }

  static constexpr ElementSet full(int n) {
    return ElementSet(n >= kCapacity ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static constexpr ElementSet single(int x) { return ElementSet(Mask{1} << x); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool contains(int x) const { return (bits_ >> x) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  /// Smallest element; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }

  constexpr void insert(int x) { bits_ |= Mask{1} << x; }
  constexpr void erase(int x) { bits_ &= ~(Mask{1} << x); }

  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const ElementSet&) const = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (Mask b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  Mask bits_ = 0;
};

/// Canonical order on element sets: by size, then lexicographically on the
/// ascending element lists.
inline bool canonical_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

}  // namespace ctk
