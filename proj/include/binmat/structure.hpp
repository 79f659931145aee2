#pragma once

#include <array>
#include <string>
#include <vector>

#include "binmat/connectivity.hpp"
#include "binmat/matroid.hpp"

namespace binmat {

/// The binary matroid on E1 xor E2 whose cycles are the sets C1 xor C2 with
/// C_i a cycle of m_i and C1, C2 agreeing on E1 & E2. Elements of m1 come first,
/// then those of m2, each in their original order. Throws kEmptyGroundSet when
/// the two ground sets coincide.
Matroid delta_sum(const Matroid& m1, const Matroid& m2);

/// Labels shared by m1 and m2, in m1's element order.
std::vector<std::string> shared_labels(const Matroid& m1, const Matroid& m2);

/// delta_sum of two matroids glued along a common triangle T, each having at
/// least 7 elements. With `strict`, T must also contain no cocircuit of
/// either part. Errors: kSumSize, kSumIntersection, kNotATriangle, kStrictness.
Matroid three_sum(const Matroid& m1, const Matroid& m2, bool strict = false);

/// Replaces the triangle T by a triad on the same labels (a delta_sum with a
/// copy of M(K4)). Throws kNotATriangle.
Matroid delta_y(const Matroid& m, ElementSet triangle);
/// Dual move: replaces the triad by a triangle. Throws kNotATriad.
Matroid y_delta(const Matroid& m, ElementSet triad);

/// Appends `new_label` as a copy of e's column.
Matroid parallel_add(const Matroid& m, std::size_t e, std::string new_label);

/// The two parts produced from an exact 3-separation.
struct ThreeSumParts {
  Matroid first;   ///< side1 plus the glue triangle
  Matroid second;  ///< side2 plus the glue triangle
  std::array<std::string, 3> triangle;
};

/// Splits m along an exact 3-separation with both sides of size >= 4. The
/// glue triangle is labelled "t1#<tag>", "t2#<tag>", "t3#<tag>" and spans the
/// intersection of the spans of the two sides. three_sum(first, second)
/// reproduces m. Errors: kNotExactSeparation, kSeparationSideTooSmall,
/// kDuplicateLabel (glue label already in use).
ThreeSumParts decompose_3sep(const Matroid& m, const Separation& sep, int tag = 1);

/// A triangle and a triad with their intersection.
struct Fan {
  ElementSet triangle;
  ElementSet triad;
  ElementSet core;
  friend bool operator==(const Fan&, const Fan&) = default;
};

/// Triangle/triad pairs whose intersection meets the regular elements.
/// Requires m non-regular (kNotApplicable) and 3-connected
/// (kNotThreeConnected).
std::vector<Fan> find_undesired_fans(const Matroid& m);
/// Same scan with the regular-element set supplied by the caller.
std::vector<Fan> find_undesired_fans(const Matroid& m, ElementSet regular);

/// m / f for an undesired fan whose triad has exactly one element f outside
/// its triangle; requires at least 10 elements. Throws kFanPrecondition.
Matroid contract_fan_apex(const Matroid& m, const Fan& fan);

}  // namespace binmat
