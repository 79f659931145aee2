#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "binmat/matroid.hpp"

namespace binmat {

/// Graphic matroid of the wheel with r spokes: rank r, spokes s1..sr and rim
/// edges r1..rr, where {s_i, r_i, s_(i+1)} is a triangle. Requires r >= 3.
Matroid wheel(std::size_t r);

namespace catalog {

enum class Provenance { kExplicitMatrix, kDerivedConstruction };

struct Entry {
  std::string name;
  Matroid matroid;
  Provenance provenance;
};

/// Names accepted by get(), in listing order: F7 F7* S8 S8* P9 P9* AG32 Z4
/// MK4 E5 S10 S10* T12 F7P S8P W3 .. W8.
const std::vector<std::string>& names();

/// Throws kUnknownName.
const Entry& entry(std::string_view name);
inline const Matroid& get(std::string_view name) { return entry(name).matroid; }
bool contains(std::string_view name);

}  // namespace catalog
}  // namespace binmat
