#include "binmat/connectivity.hpp"

#include <algorithm>

#include "binmat/error.hpp"

namespace binmat {

namespace {

constexpr std::size_t kMaxScan = 16;

void check_scan_size(const Matroid& m) {
  if (m.size() > kMaxScan) {
    throw MatroidError(ErrorCode::kTooLarge,
                       "partition scans are limited to 16 elements, got " +
                           std::to_string(m.size()));
  }
}

// rank[X] for every subset X.
std::vector<std::uint8_t> rank_table(const Matroid& m) {
  const std::size_t n = m.size();
  std::vector<std::uint8_t> rank(std::size_t{1} << n, 0);
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
    rank[x] = static_cast<std::uint8_t>(rank_of(m, ElementSet(x)));
  }
  return rank;
}

}  // namespace

std::size_t connectivity(const Matroid& m, ElementSet x) {
  return rank_of(m, x) + rank_of(m, m.ground() - x) - m.rank();
}

std::vector<std::uint8_t> connectivity_table(const Matroid& m) {
  check_scan_size(m);
  const auto rank = rank_table(m);
  const std::uint64_t full = m.ground().bits();
  std::vector<std::uint8_t> lambda(rank.size());
  for (std::uint64_t x = 0; x < rank.size(); ++x) {
    lambda[x] = static_cast<std::uint8_t>(rank[x] + rank[full & ~x] - m.rank());
  }
  return lambda;
}

std::vector<Separation> separations(const Matroid& m, std::size_t j, bool exact_only) {
  if (j == 0) throw MatroidError(ErrorCode::kInvalidArgument, "j must be at least 1");
  check_scan_size(m);
  std::vector<Separation> out;
  const std::size_t n = m.size();
  if (n < 2 * j) return out;
  const auto lambda = connectivity_table(m);
  const ElementSet ground = m.ground();
  // X ranges over subsets avoiding the last element, so each unordered pair
  // is seen once.
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  for (std::uint64_t x = 1; x < half; ++x) {
    const ElementSet a(x);
    const ElementSet b = ground - a;
    if (a.size() < j || b.size() < j) continue;
    const std::size_t order = lambda[x];
    if (order > j - 1 || (exact_only && order != j - 1)) continue;
    Separation s;
    const bool a_first = a.size() != b.size() ? a.size() < b.size() : a.contains(0);
    s.side1 = a_first ? a : b;
    s.side2 = a_first ? b : a;
    s.order = order;
    s.exact = order == j - 1;
    s.minimal = s.exact && (a.size() == j || b.size() == j);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const Separation& p, const Separation& q) {
    if (p.order != q.order) return p.order < q.order;
    if (p.side1.size() != q.side1.size()) return p.side1.size() < q.side1.size();
    return canonical_less(p.side1, q.side1);
  });
  return out;
}

bool is_3connected(const Matroid& m) {
  check_scan_size(m);
  const auto lambda = connectivity_table(m);
  const ElementSet ground = m.ground();
  for (std::uint64_t x = 1; x < lambda.size() - 1; ++x) {
    const ElementSet a(x);
    const std::size_t small = std::min(a.size(), (ground - a).size());
    if (lambda[x] == 0) return false;                 // 1-separation
    if (small >= 2 && lambda[x] <= 1) return false;   // 2-separation
  }
  return true;
}

bool is_internally_4connected(const Matroid& m) {
  if (!is_3connected(m)) return false;
  const auto lambda = connectivity_table(m);
  const ElementSet ground = m.ground();
  for (std::uint64_t x = 1; x < lambda.size() - 1; ++x) {
    const ElementSet a(x);
    if (a.size() >= 4 && (ground - a).size() >= 4 && lambda[x] < 3) return false;
  }
  return true;
}

}  // namespace binmat
