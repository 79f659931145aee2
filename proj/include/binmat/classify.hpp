#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binmat/matroid.hpp"

namespace binmat {

/// Structural shapes of 3-connected non-regular binary matroids with at least
/// two regular elements.
enum class StructureKind {
  kSmallException,   ///< isomorphic to F7, F7* or S8
  kThreeSum,         ///< F7 or S8 3-summed with one regular part
  kDoubleThreeSum,   ///< F7p or S8p 3-summed with two regular parts along disjoint triangles
  kNotInClass,
  kNotApplicable,    ///< the input is regular
};

std::string_view kind_name(StructureKind kind);

struct LabeledSeparation {
  std::vector<std::string> side1;
  std::vector<std::string> side2;
};

struct Classification {
  StructureKind kind = StructureKind::kNotInClass;
  /// Catalog name the core is isomorphic to: F7, F7*, S8, F7P or S8P.
  std::string core_name;
  /// The non-regular piece, with elements parallel to glue labels removed.
  std::optional<Matroid> core_part;
  std::vector<Matroid> regular_parts;
  std::vector<std::array<std::string, 3>> glue_triangles;
  /// Separations used, each in the matroid it was found in.
  std::vector<LabeledSeparation> separations;
  /// Elements parallel to a glue element that were set aside before testing
  /// the parts.
  std::vector<std::string> parallel_to_glue;
};

/// Decides which shape, if any, a 3-connected binary matroid has.
///
/// Exact 3-separations with both sides of size >= 4 are tried with the most
/// balanced first. A split yields kThreeSum when one part is F7 or S8 and
/// the other is regular and 3-connected, in both cases after setting aside
/// elements parallel to the glue triangle. Failing that, the non-regular part
/// of each split is split once more, looking for an F7p or S8p core carrying
/// both glue triangles. Throws kNotThreeConnected.
Classification classify(const Matroid& m);

/// Whether the kind is one of the three in-class shapes.
bool in_class(StructureKind kind);

/// Line-oriented text report: kind, core, glue triangles, separations, and
/// every part as a .bm block.
std::string to_report(const Classification& c);

}  // namespace binmat
