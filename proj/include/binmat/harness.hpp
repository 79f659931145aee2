#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include "binmat/classify.hpp"
#include "binmat/matroid.hpp"

namespace binmat {

struct EnumerationSpec {
  std::size_t n = 0;
  /// Ranks to produce; empty means every feasible rank.
  std::vector<std::size_t> ranks;
  /// When false, ranks reached only through duality are rejected and the
  /// scan keeps every simple matroid of full rank.
  bool require_3connected = true;
  /// Keep one representative per isomorphism class.
  bool dedupe = true;
};

struct Instance {
  std::string id;  ///< "n<size>-r<rank>-<k>", k counting from 1 within the rank
  Matroid matroid;
};

/// Simple binary matroids on spec.n elements, labelled 1..n, ordered by rank
/// and then discovery order. Ranks r <= n - r come from scanning n-subsets
/// of the points of PG(r - 1, 2); larger ranks are duals of the complementary
/// rank. Rank 5 at n = 10 is assembled from 9-element classes: every
/// 3-connected 10-element rank-5 matroid other than W5 has an element whose
/// deletion or contraction is 3-connected. Requires 4 <= n <= 10 (kTooLarge
/// above, kInvalidArgument below).
std::vector<Instance> enumerate(const EnumerationSpec& spec);

/// One representative per isomorphism class of 3-connected binary matroids
/// on n elements.
std::vector<Instance> enumerate_3connected(std::size_t n);

/// One assertion outcome, emitted as a JSON line.
struct Record {
  std::string check;
  std::string instance;
  std::string assertion;
  bool passed = false;
};

struct Failure {
  std::string instance;
  std::string serialization;  ///< .bm text of the offending matroid
  std::string assertion;
};

struct CheckReport {
  std::string name;
  std::size_t instances = 0;
  std::vector<Failure> failures;
  std::chrono::duration<double> elapsed{};
  std::vector<Record> records;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

/// For every non-regular 3-connected instance on n = 9 or 10 elements:
/// |R| is 0, 1, 2 or 4; an R of size 4 is a circuit and a cocircuit; the
/// matroid has a P9 or P9* minor. Throws kInvalidArgument for other n.
CheckReport check_regular_count(std::size_t n);

/// For every non-regular 3-connected instance on n <= 10 elements, the
/// classifier reports an in-class shape exactly when |R| >= 2. Then every
/// composed fixture is checked to be 3-connected and non-regular, to have
/// |R| >= 2 and to be classified with its expected shape.
CheckReport check_two_regular_characterization(std::size_t n);

/// Regular-element counts, self-duality, internal 4-connectivity, P9 deletion
/// witnesses and extension counts of the catalog.
CheckReport check_catalog_facts();

/// A hand-built member of the class.
struct Fixture {
  std::string name;
  Matroid matroid;
  StructureKind expected;
};

/// 3-sums of F7 and S8 with wheels, and F7P and S8P with two 4-wheels on
/// disjoint triangles; between 9 and 13 elements.
std::vector<Fixture> composed_fixtures();

/// Glues `part` onto `core` along the triangle `core_triangle` of core. The
/// triangle `part_triangle` of part takes the core labels in order and every
/// other element of part is renamed to prefix + its label.
Matroid three_sum_along(const Matroid& core, const std::vector<std::string>& core_triangle,
                        const Matroid& part, const std::vector<std::string>& part_triangle,
                        const std::string& prefix);

/// Summary line, notes and one line per failure.
void write_summary(std::ostream& out, const CheckReport& report);
/// One JSON object per record.
void write_records(std::ostream& out, const CheckReport& report);

}  // namespace binmat
