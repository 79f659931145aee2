#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace binmat {

/// Dense 0/1 matrix over GF(2), stored row-major in 64-bit words.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t nrows, std::size_t ncols);

  /// Builds a matrix from nested 0/1 rows; every row must have equal length.
  static GF2Matrix from_rows(const std::vector<std::vector<int>>& rows);
  /// Column j of the result is `columns[j]`, bit i giving row i (nrows <= 64).
  static GF2Matrix from_columns(std::span<const std::uint64_t> columns,
                                std::size_t nrows);
  static GF2Matrix identity(std::size_t n);

  std::size_t rows() const { return nrows_; }
  std::size_t cols() const { return ncols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c) {
    words_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64);
  }

  /// row[dst] += row[src].
  void add_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t r) const;

  /// In-place reduced row echelon form. Pivots are chosen left to right in
  /// `column_order` (all columns in index order when empty). Zero rows end up
  /// at the bottom. Returns the pivot column of each nonzero row.
  std::vector<std::size_t> row_reduce(std::span<const std::size_t> column_order = {});

  std::size_t rank() const;
  /// Rows form a basis of {v : A v = 0}.
  GF2Matrix null_space() const;
  GF2Matrix transpose() const;
  /// Copy with rows [0, n) only.
  GF2Matrix top_rows(std::size_t n) const;
  GF2Matrix select_columns(std::span<const std::size_t> columns) const;
  /// Column j packed as a mask over rows; requires rows() <= 64.
  std::uint64_t column(std::size_t j) const;
  /// Row r packed as a mask over columns; requires cols() <= 64.
  std::uint64_t row_mask(std::size_t r) const;

  std::string to_string() const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Incremental basis of a subspace of GF(2)^64, kept in echelon form keyed by
/// the highest set bit. Optionally records, for each stored vector, which
/// inserted vectors it is a combination of.
class LinearBasis {
 public:
  /// Inserts v; returns true when v was independent of the current span.
  bool insert(std::uint64_t v, std::uint64_t tag = 0);
  /// Canonical representative of v modulo the span: zero at every pivot
  /// position, and zero iff v is in the span.
  std::uint64_t reduce(std::uint64_t v) const;
  /// Like reduce, also returning the xor of the tags consumed.
  std::uint64_t reduce(std::uint64_t v, std::uint64_t& tag) const;
  bool contains(std::uint64_t v) const { return reduce(v) == 0; }
  std::size_t dimension() const { return count_; }
  std::vector<std::uint64_t> vectors() const;

 private:
  std::uint64_t pivot_[64] = {};
  std::uint64_t tags_[64] = {};
  std::uint64_t occupied_ = 0;
  std::size_t count_ = 0;
};

/// Rank of the span of `vectors`.
std::size_t span_rank(std::span<const std::uint64_t> vectors);

}  // namespace binmat
