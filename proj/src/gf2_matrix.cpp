#include "binmat/gf2_matrix.hpp"

#include <bit>
#include <numeric>
#include <utility>

#include "binmat/error.hpp"

namespace binmat {

GF2Matrix::GF2Matrix(std::size_t nrows, std::size_t ncols)
    : nrows_(nrows),
      ncols_(ncols),
      stride_((ncols + 63) / 64),
      words_(nrows * stride_, 0) {}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  GF2Matrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) {
      throw MatroidError(ErrorCode::kMalformedInput, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      if (rows[r][c] != 0 && rows[r][c] != 1) {
        throw MatroidError(ErrorCode::kMalformedInput, "matrix entries must be 0 or 1");
      }
      m.set(r, c, rows[r][c] == 1);
    }
  }
  return m;
}

GF2Matrix GF2Matrix::from_columns(std::span<const std::uint64_t> columns,
                                  std::size_t nrows) {
  if (nrows > 64) throw MatroidError(ErrorCode::kTooLarge, "more than 64 rows");
  GF2Matrix m(nrows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::uint64_t rest = columns[c]; rest != 0; rest &= rest - 1) {
      const auto r = static_cast<std::size_t>(std::countr_zero(rest));
      if (r >= nrows) {
        throw MatroidError(ErrorCode::kInvalidArgument, "column vector exceeds row count");
      }
      m.set(r, c, true);
    }
  }
  return m;
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool value) {
  auto& w = words_[r * stride_ + c / 64];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  w = value ? (w | bit) : (w & ~bit);
}

void GF2Matrix::add_row(std::size_t dst, std::size_t src) {
  for (std::size_t k = 0; k < stride_; ++k) {
    words_[dst * stride_ + k] ^= words_[src * stride_ + k];
  }
}

void GF2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t k = 0; k < stride_; ++k) {
    std::swap(words_[a * stride_ + k], words_[b * stride_ + k]);
  }
}

bool GF2Matrix::row_is_zero(std::size_t r) const {
  for (std::size_t k = 0; k < stride_; ++k) {
    if (words_[r * stride_ + k] != 0) return false;
  }
  return true;
}

std::vector<std::size_t> GF2Matrix::row_reduce(std::span<const std::size_t> column_order) {
  std::vector<std::size_t> order;
  if (column_order.empty()) {
    order.resize(ncols_);
    std::iota(order.begin(), order.end(), std::size_t{0});
  } else {
    order.assign(column_order.begin(), column_order.end());
  }
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c : order) {
    if (next == nrows_) break;
    std::size_t found = nrows_;
    for (std::size_t r = next; r < nrows_; ++r) {
      if (get(r, c)) {
        found = r;
        break;
      }
    }
    if (found == nrows_) continue;
    swap_rows(next, found);
    for (std::size_t r = 0; r < nrows_; ++r) {
      if (r != next && get(r, c)) add_row(r, next);
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

std::size_t GF2Matrix::rank() const {
  GF2Matrix copy = *this;
  return copy.row_reduce().size();
}

GF2Matrix GF2Matrix::null_space() const {
  GF2Matrix reduced = *this;
  const auto pivots = reduced.row_reduce();
  std::vector<bool> is_pivot(ncols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  GF2Matrix basis(ncols_ - pivots.size(), ncols_);
  std::size_t row = 0;
  for (std::size_t free = 0; free < ncols_; ++free) {
    if (is_pivot[free]) continue;
    basis.set(row, free, true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (reduced.get(i, free)) basis.set(row, pivots[i], true);
    }
    ++row;
  }
  return basis;
}

GF2Matrix GF2Matrix::transpose() const {
  GF2Matrix t(ncols_, nrows_);
  for (std::size_t r = 0; r < nrows_; ++r) {
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

GF2Matrix GF2Matrix::top_rows(std::size_t n) const {
  GF2Matrix m(n, ncols_);
  std::copy(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(n * stride_),
            m.words_.begin());
  return m;
}

GF2Matrix GF2Matrix::select_columns(std::span<const std::size_t> columns) const {
  GF2Matrix m(nrows_, columns.size());
  for (std::size_t r = 0; r < nrows_; ++r) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (get(r, columns[j])) m.set(r, j, true);
    }
  }
  return m;
}

std::uint64_t GF2Matrix::column(std::size_t j) const {
  std::uint64_t v = 0;
  for (std::size_t r = 0; r < nrows_ && r < 64; ++r) {
    if (get(r, j)) v |= std::uint64_t{1} << r;
  }
  return v;
}

std::uint64_t GF2Matrix::row_mask(std::size_t r) const {
  return stride_ == 0 ? 0 : words_[r * stride_];
}

std::string GF2Matrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < nrows_; ++r) {
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (c > 0) out += ' ';
      out += get(r, c) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

bool LinearBasis::insert(std::uint64_t v, std::uint64_t tag) {
  while (v != 0) {
    const int top = 63 - std::countl_zero(v);
    if (pivot_[top] == 0) {
      pivot_[top] = v;
      tags_[top] = tag;
      occupied_ |= std::uint64_t{1} << top;
      ++count_;
      return true;
    }
    v ^= pivot_[top];
    tag ^= tags_[top];
  }
  return false;
}

std::uint64_t LinearBasis::reduce(std::uint64_t v) const {
  std::uint64_t tag = 0;
  return reduce(v, tag);
}

std::uint64_t LinearBasis::reduce(std::uint64_t v, std::uint64_t& tag) const {
  // Clearing every pivot position, highest first, yields the unique
  // representative of v modulo the span with zeros at all pivot positions.
  std::uint64_t below = ~std::uint64_t{0};
  while (const std::uint64_t hit = v & occupied_ & below) {
    const int top = 63 - std::countl_zero(hit);
    v ^= pivot_[top];
    tag ^= tags_[top];
    below = (std::uint64_t{1} << top) - 1;
  }
  return v;
}

std::vector<std::uint64_t> LinearBasis::vectors() const {
  std::vector<std::uint64_t> out;
  for (int i = 63; i >= 0; --i) {
    if (pivot_[i] != 0) out.push_back(pivot_[i]);
  }
  return out;
}

std::size_t span_rank(std::span<const std::uint64_t> vectors) {
  LinearBasis basis;
  for (auto v : vectors) basis.insert(v);
  return basis.dimension();
}

}  // namespace binmat
