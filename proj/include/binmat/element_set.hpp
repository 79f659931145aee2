#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace binmat {

/// A set of element indices of one matroid, packed into a 64-bit mask.
///
/// Indices refer to positions in Matroid::labels(). Every matroid handled by
/// the library has at most kCapacity elements.
class ElementSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    constexpr const_iterator() = default;
    constexpr explicit const_iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr std::size_t operator*() const {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr const_iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const const_iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<std::size_t> indices) {
    for (auto i : indices) insert(i);
  }

  /// {0, ..., n-1}.
  static constexpr ElementSet first(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr ElementSet single(std::size_t i) {
    return ElementSet(std::uint64_t{1} << i);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// Smallest index; undefined on an empty set.
  constexpr std::size_t front() const {
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }

  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr ElementSet with(std::size_t i) const {
    return ElementSet(bits_ | (std::uint64_t{1} << i));
  }
  constexpr ElementSet without(std::size_t i) const {
    return ElementSet(bits_ & ~(std::uint64_t{1} << i));
  }

  constexpr const_iterator begin() const { return const_iterator(bits_); }
  constexpr const_iterator end() const { return const_iterator(0); }

  std::vector<std::size_t> indices() const { return {begin(), end()}; }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ ^ b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order for families of sets: by size, then lexicographically by
/// the ascending index lists.
inline bool canonical_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // The first differing index decides; the set holding it is smaller.
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() >> std::countr_zero(diff)) & 1U;
}

/// Calls f(subset) for every k-subset of `universe`, in colex order of masks.
template <typename F>
void for_each_subset_of_size(ElementSet universe, std::size_t k, F&& f) {
  const auto idx = universe.indices();
  const std::size_t n = idx.size();
  if (k > n) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    ElementSet s;
    for (auto p : pick) s.insert(idx[p]);
    if constexpr (std::is_same_v<decltype(f(s)), bool>) {
      if (!f(s)) return;
    } else {
      f(s);
    }
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace binmat
