#pragma once

#include <optional>
#include <string>

#include "binmat/isomorphism.hpp"
#include "binmat/matroid.hpp"

namespace binmat {

/// Outcome of the excluded-minor regularity test.
struct RegularityResult {
  bool regular = true;
  /// For non-regular input: the F7 or F7* minor found.
  std::optional<MinorWitness> witness;
  /// "F7" or "F7*" when non-regular.
  std::string excluded_minor;
};

/// A binary matroid is regular iff it has neither F7 nor F7* as a minor.
RegularityResult is_regular(const Matroid& m);

/// Elements e with both m \ e and m / e regular. Only defined for
/// non-regular m; throws kNotApplicable otherwise.
ElementSet regular_elements(const Matroid& m);

/// Whether e is a regular element, without the non-regularity precondition.
bool is_regular_element(const Matroid& m, std::size_t e);

struct RegularReport {
  bool is_regular = true;
  std::optional<MinorWitness> witness;
  /// Populated only when non-regular.
  ElementSet regular_elements;
};

RegularReport regularity_report(const Matroid& m);

}  // namespace binmat
