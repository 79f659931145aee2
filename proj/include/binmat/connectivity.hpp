#pragma once

#include <cstddef>
#include <vector>

#include "binmat/matroid.hpp"

namespace binmat {

/// A partition (side1, side2) of E(M) with its connectivity order.
struct Separation {
  ElementSet side1;
  ElementSet side2;
  std::size_t order = 0;  ///< lambda(side1)
  bool exact = false;     ///< order == j - 1 for the j it was enumerated with
  bool minimal = false;   ///< exact and one side has exactly j elements

  friend bool operator==(const Separation&, const Separation&) = default;
};

/// r(X) + r(E - X) - r(M).
std::size_t connectivity(const Matroid& m, ElementSet x);

/// Partitions with both sides of size >= j and order <= j - 1 (== j - 1 when
/// exact_only), one per unordered pair, sorted by (order, smaller side size,
/// side1 lexicographically). side1 is the smaller side, or on ties the side
/// holding the lowest element index. Throws kTooLarge beyond 16 elements.
std::vector<Separation> separations(const Matroid& m, std::size_t j, bool exact_only = false);

bool is_3connected(const Matroid& m);

/// 3-connected, and every partition with both sides of size >= 4 has
/// connectivity at least 3.
bool is_internally_4connected(const Matroid& m);

/// Connectivity of every subset, indexed by mask; exposes the subset scan for
/// callers that need many evaluations. Throws kTooLarge beyond 16 elements.
std::vector<std::uint8_t> connectivity_table(const Matroid& m);

}  // namespace binmat
