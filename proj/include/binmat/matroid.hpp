#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binmat/element_set.hpp"
#include "binmat/gf2_matrix.hpp"

namespace binmat {

/// A binary matroid: an ordered list of distinct labels and a full-row-rank
/// GF(2) representation with one column per label.
///
/// The stored representation is the reduced row echelon form of the input,
/// with pivots taken in element order. Values are immutable once built.
class Matroid {
 public:
  Matroid() = default;

  /// Normalizes `rep` to reduced standard form. Zero columns (loops) are kept.
  /// Throws kDuplicateLabel or kLabelCountMismatch.
  static Matroid standard_form(const GF2Matrix& rep, std::vector<std::string> labels);

  /// Same as standard_form for a representation given by column vectors
  /// (bit i of columns[j] is row i).
  static Matroid from_columns(std::vector<std::string> labels,
                              std::span<const std::uint64_t> columns);

  /// The matroid whose cycle space is the row space of `cycles`.
  static Matroid from_cycle_space(const GF2Matrix& cycles, std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  std::size_t rank() const { return rank_; }
  std::size_t corank() const { return size() - rank_; }
  ElementSet ground() const { return ElementSet::first(size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Index of `label`; throws kUnknownLabel.
  std::size_t index(std::string_view label) const;
  /// Throws kUnknownLabel.
  ElementSet subset(std::span<const std::string> labels) const;
  ElementSet subset(std::initializer_list<std::string_view> labels) const;
  /// Labels of the members of `set`, in element order.
  std::vector<std::string> labels_of(ElementSet set) const;

  /// Column vectors of the canonical representation (bit i = row i).
  const std::vector<std::uint64_t>& columns() const { return columns_; }
  std::uint64_t column(std::size_t i) const { return columns_[i]; }
  GF2Matrix representation() const;

  /// Same labels and the same cycle space, independent of element order.
  friend bool operator==(const Matroid& a, const Matroid& b);

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> columns_;
  std::size_t rank_ = 0;
};

/// Free-function spelling of Matroid::standard_form.
inline Matroid standard_form(const GF2Matrix& rep, std::vector<std::string> labels) {
  return Matroid::standard_form(rep, std::move(labels));
}

std::size_t rank_of(const Matroid& m, ElementSet x);
ElementSet closure(const Matroid& m, ElementSet x);
bool is_independent(const Matroid& m, ElementSet x);
/// A maximal independent subset of x, chosen greedily in index order.
ElementSet independent_part(const Matroid& m, ElementSet x);

Matroid dual(const Matroid& m);
Matroid delete_elements(const Matroid& m, ElementSet x);
/// Contracts the independent part of x and deletes the remaining elements.
Matroid contract_elements(const Matroid& m, ElementSet x);
/// m restricted to x (the deletion of its complement).
Matroid restrict_to(const Matroid& m, ElementSet x);
/// A copy with labels renamed elementwise; new labels must stay distinct.
Matroid relabel(const Matroid& m, std::vector<std::string> labels);

ElementSet loops(const Matroid& m);
ElementSet coloops(const Matroid& m);

struct Removal {
  std::string removed;
  /// Retained element the removed one was parallel (or in series) with;
  /// empty for loops (or coloops).
  std::optional<std::string> partner;
  friend bool operator==(const Removal&, const Removal&) = default;
};

struct Reduction {
  Matroid matroid;
  std::vector<Removal> removed;
};

/// Removes loops and all but the lexicographically least label of each
/// parallel class.
Reduction simplify(const Matroid& m);
/// dual(simplify(dual(m))) with the series-class map.
Reduction cosimplify(const Matroid& m);
bool is_simple(const Matroid& m);

/// Rows form a basis of the cycle space {v : rep v = 0}.
GF2Matrix cycle_space(const Matroid& m);

/// All circuits (of size at most max_size, when given), canonically sorted.
std::vector<ElementSet> circuits(const Matroid& m, std::optional<std::size_t> max_size = {});
std::vector<ElementSet> cocircuits(const Matroid& m,
                                   std::optional<std::size_t> max_size = {});
std::vector<ElementSet> triangles(const Matroid& m);
std::vector<ElementSet> triads(const Matroid& m);

bool is_circuit(const Matroid& m, ElementSet x);
bool is_cocircuit(const Matroid& m, ElementSet x);
/// Whether x is a disjoint union of circuits.
bool is_cycle(const Matroid& m, ElementSet x);

/// "x<k>" for the smallest k >= 1 such that the label is unused.
std::string fresh_label(const Matroid& m, std::string_view prefix = "x");

}  // namespace binmat
