#include "binmat/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_set>

#include "binmat/error.hpp"

namespace binmat {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kLabelCountMismatch: return "LabelCountMismatch";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kNotApplicable: return "NotApplicable";
    case ErrorCode::kEmptyGroundSet: return "EmptyGroundSet";
    case ErrorCode::kSumSize: return "SumSize";
    case ErrorCode::kSumIntersection: return "SumIntersection";
    case ErrorCode::kNotATriangle: return "NotATriangle";
    case ErrorCode::kNotATriad: return "NotATriad";
    case ErrorCode::kStrictness: return "Strictness";
    case ErrorCode::kNotExactSeparation: return "NotExactSeparation";
    case ErrorCode::kSeparationSideTooSmall: return "SeparationSideTooSmall";
    case ErrorCode::kNotThreeConnected: return "NotThreeConnected";
    case ErrorCode::kFanPrecondition: return "FanPrecondition";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

void check_labels(const std::vector<std::string>& labels, std::size_t ncols) {
  if (labels.size() != ncols) {
    throw MatroidError(ErrorCode::kLabelCountMismatch,
                       std::to_string(labels.size()) + " labels for " +
                           std::to_string(ncols) + " columns");
  }
  if (labels.size() > ElementSet::kCapacity) {
    throw MatroidError(ErrorCode::kTooLarge, "more than 64 elements");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw MatroidError(ErrorCode::kInvalidArgument, "empty label");
    if (!seen.insert(l).second) {
      throw MatroidError(ErrorCode::kDuplicateLabel, "duplicate label '" + l + "'");
    }
  }
}

std::uint64_t xor_of(const Matroid& m, ElementSet x) {
  std::uint64_t v = 0;
  for (auto i : x) v ^= m.column(i);
  return v;
}

}  // namespace

Matroid Matroid::standard_form(const GF2Matrix& rep, std::vector<std::string> labels) {
  check_labels(labels, rep.cols());
  GF2Matrix reduced = rep;
  const auto pivots = reduced.row_reduce();
  Matroid m;
  m.labels_ = std::move(labels);
  m.rank_ = pivots.size();
  m.columns_.resize(rep.cols());
  for (std::size_t j = 0; j < rep.cols(); ++j) {
    std::uint64_t v = 0;
    for (std::size_t r = 0; r < m.rank_; ++r) {
      if (reduced.get(r, j)) v |= std::uint64_t{1} << r;
    }
    m.columns_[j] = v;
  }
  return m;
}

Matroid Matroid::from_columns(std::vector<std::string> labels,
                              std::span<const std::uint64_t> columns) {
  int height = 0;
  for (auto c : columns) height = std::max(height, static_cast<int>(std::bit_width(c)));
  return standard_form(GF2Matrix::from_columns(columns, static_cast<std::size_t>(height)),
                       std::move(labels));
}

Matroid Matroid::from_cycle_space(const GF2Matrix& cycles, std::vector<std::string> labels) {
  check_labels(labels, cycles.cols());
  return standard_form(cycles.null_space(), std::move(labels));
}

std::optional<std::size_t> Matroid::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t Matroid::index(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw MatroidError(ErrorCode::kUnknownLabel, "unknown label '" + std::string(label) + "'");
}

ElementSet Matroid::subset(std::span<const std::string> labels) const {
  ElementSet s;
  for (const auto& l : labels) s.insert(index(l));
  return s;
}

ElementSet Matroid::subset(std::initializer_list<std::string_view> labels) const {
  ElementSet s;
  for (auto l : labels) s.insert(index(l));
  return s;
}

std::vector<std::string> Matroid::labels_of(ElementSet set) const {
  std::vector<std::string> out;
  for (auto i : set) out.push_back(labels_[i]);
  return out;
}

GF2Matrix Matroid::representation() const {
  return GF2Matrix::from_columns(columns_, rank_);
}

bool operator==(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  std::vector<std::size_t> order_a(a.size()), order_b(b.size());
  std::iota(order_a.begin(), order_a.end(), std::size_t{0});
  std::iota(order_b.begin(), order_b.end(), std::size_t{0});
  std::sort(order_a.begin(), order_a.end(),
            [&](auto x, auto y) { return a.label(x) < a.label(y); });
  std::sort(order_b.begin(), order_b.end(),
            [&](auto x, auto y) { return b.label(x) < b.label(y); });
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.label(order_a[i]) != b.label(order_b[i])) return false;
  }
  GF2Matrix ra = a.representation().select_columns(order_a);
  GF2Matrix rb = b.representation().select_columns(order_b);
  ra.row_reduce();
  rb.row_reduce();
  return ra == rb;
}

std::size_t rank_of(const Matroid& m, ElementSet x) {
  LinearBasis basis;
  for (auto i : x) basis.insert(m.column(i));
  return basis.dimension();
}

bool is_independent(const Matroid& m, ElementSet x) {
  return rank_of(m, x) == x.size();
}

ElementSet independent_part(const Matroid& m, ElementSet x) {
  LinearBasis basis;
  ElementSet out;
  for (auto i : x) {
    if (basis.insert(m.column(i))) out.insert(i);
  }
  return out;
}

ElementSet closure(const Matroid& m, ElementSet x) {
  LinearBasis basis;
  for (auto i : x) basis.insert(m.column(i));
  ElementSet out;
  for (std::size_t e = 0; e < m.size(); ++e) {
    if (basis.contains(m.column(e))) out.insert(e);
  }
  return out;
}

Matroid dual(const Matroid& m) {
  return Matroid::standard_form(m.representation().null_space(), m.labels());
}

Matroid restrict_to(const Matroid& m, ElementSet x) {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> cols;
  for (auto i : x) {
    labels.push_back(m.label(i));
    cols.push_back(m.column(i));
  }
  return Matroid::from_columns(std::move(labels), cols);
}

Matroid delete_elements(const Matroid& m, ElementSet x) {
  return restrict_to(m, m.ground() - x);
}

Matroid contract_elements(const Matroid& m, ElementSet x) {
  LinearBasis basis;
  for (auto i : x) basis.insert(m.column(i));
  std::vector<std::string> labels;
  std::vector<std::uint64_t> cols;
  for (auto i : m.ground() - x) {
    labels.push_back(m.label(i));
    cols.push_back(basis.reduce(m.column(i)));
  }
  return Matroid::from_columns(std::move(labels), cols);
}

Matroid relabel(const Matroid& m, std::vector<std::string> labels) {
  return Matroid::from_columns(std::move(labels), m.columns());
}

ElementSet loops(const Matroid& m) {
  ElementSet out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.column(i) == 0) out.insert(i);
  }
  return out;
}

ElementSet coloops(const Matroid& m) {
  ElementSet out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (rank_of(m, m.ground().without(i)) < m.rank()) out.insert(i);
  }
  return out;
}

Reduction simplify(const Matroid& m) {
  std::map<std::uint64_t, std::size_t> keeper;  // column -> retained index
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto c = m.column(i);
    if (c == 0) continue;
    auto [it, inserted] = keeper.emplace(c, i);
    if (!inserted && m.label(i) < m.label(it->second)) it->second = i;
  }
  Reduction out;
  ElementSet kept;
  for (const auto& [col, i] : keeper) kept.insert(i);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (kept.contains(i)) continue;
    Removal r{m.label(i), std::nullopt};
    if (m.column(i) != 0) r.partner = m.label(keeper.at(m.column(i)));
    out.removed.push_back(std::move(r));
  }
  out.matroid = restrict_to(m, kept);
  return out;
}

Reduction cosimplify(const Matroid& m) {
  Reduction d = simplify(dual(m));
  d.matroid = dual(d.matroid);
  return d;
}

bool is_simple(const Matroid& m) {
  std::unordered_set<std::uint64_t> seen;
  for (auto c : m.columns()) {
    if (c == 0 || !seen.insert(c).second) return false;
  }
  return true;
}

GF2Matrix cycle_space(const Matroid& m) {
  return m.representation().null_space();
}

bool is_cycle(const Matroid& m, ElementSet x) { return xor_of(m, x) == 0; }

bool is_circuit(const Matroid& m, ElementSet x) {
  return !x.empty() && is_cycle(m, x) && rank_of(m, x) + 1 == x.size();
}

bool is_cocircuit(const Matroid& m, ElementSet x) {
  // x is a cocircuit iff E - x is a hyperplane.
  if (x.empty()) return false;
  const ElementSet rest = m.ground() - x;
  if (rank_of(m, rest) + 1 != m.rank()) return false;
  return closure(m, rest) == rest;
}

namespace {

double binomial_sum(std::size_t n, std::size_t k) {
  double total = 0, term = 1;
  for (std::size_t s = 0; s <= k && s <= n; ++s) {
    total += term;
    term = term * static_cast<double>(n - s) / static_cast<double>(s + 1);
  }
  return total;
}

}  // namespace

std::vector<ElementSet> circuits(const Matroid& m, std::optional<std::size_t> max_size) {
  const std::size_t limit = max_size.value_or(m.size());
  const std::size_t nullity = m.corank();
  std::vector<ElementSet> out;
  const bool by_subsets =
      binomial_sum(m.size(), limit) < static_cast<double>(std::uint64_t{1} << std::min<std::size_t>(nullity, 62));
  if (by_subsets) {
    for (std::size_t k = 1; k <= limit && k <= m.size(); ++k) {
      for_each_subset_of_size(m.ground(), k, [&](ElementSet s) {
        if (is_circuit(m, s)) out.push_back(s);
      });
    }
  } else {
    if (nullity > 30) throw MatroidError(ErrorCode::kTooLarge, "cycle space too large");
    const GF2Matrix z = cycle_space(m);
    std::uint64_t v = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << nullity); ++i) {
      v ^= z.row_mask(static_cast<std::size_t>(std::countr_zero(i)));
      const ElementSet s(v);
      if (s.size() <= limit && rank_of(m, s) + 1 == s.size()) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<ElementSet> cocircuits(const Matroid& m, std::optional<std::size_t> max_size) {
  return circuits(dual(m), max_size);
}

namespace {

std::vector<ElementSet> of_size_three(std::vector<ElementSet> family) {
  std::erase_if(family, [](ElementSet s) { return s.size() != 3; });
  return family;
}

}  // namespace

std::vector<ElementSet> triangles(const Matroid& m) { return of_size_three(circuits(m, 3)); }

std::vector<ElementSet> triads(const Matroid& m) { return of_size_three(cocircuits(m, 3)); }

std::string fresh_label(const Matroid& m, std::string_view prefix) {
  for (std::size_t k = 1;; ++k) {
    std::string candidate = std::string(prefix) + std::to_string(k);
    if (!m.find(candidate)) return candidate;
  }
}

}  // namespace binmat
