#include "binmat/structure.hpp"

#include <algorithm>

#include "binmat/catalog.hpp"
#include "binmat/error.hpp"
#include "binmat/regularity.hpp"

namespace binmat {

std::vector<std::string> shared_labels(const Matroid& m1, const Matroid& m2) {
  std::vector<std::string> out;
  for (const auto& l : m1.labels()) {
    if (m2.find(l)) out.push_back(l);
  }
  return out;
}

Matroid delta_sum(const Matroid& m1, const Matroid& m2) {
  const auto shared = shared_labels(m1, m2);
  // Union coordinates: shared labels first, then m1-only, then m2-only.
  std::vector<std::string> result_labels;
  for (const auto& l : m1.labels()) {
    if (!m2.find(l)) result_labels.push_back(l);
  }
  for (const auto& l : m2.labels()) {
    if (!m1.find(l)) result_labels.push_back(l);
  }
  if (result_labels.empty()) {
    throw MatroidError(ErrorCode::kEmptyGroundSet, "delta-sum of matroids on the same ground set");
  }
  const std::size_t s = shared.size();
  const std::size_t width = s + result_labels.size();
  auto position = [&](const std::string& label) {
    auto it = std::find(shared.begin(), shared.end(), label);
    if (it != shared.end()) return static_cast<std::size_t>(it - shared.begin());
    return s + static_cast<std::size_t>(
                   std::find(result_labels.begin(), result_labels.end(), label) -
                   result_labels.begin());
  };

  const GF2Matrix z1 = cycle_space(m1);
  const GF2Matrix z2 = cycle_space(m2);
  GF2Matrix gen(z1.rows() + z2.rows(), width);
  std::size_t row = 0;
  for (const auto* part : {&m1, &m2}) {
    const GF2Matrix& z = part == &m1 ? z1 : z2;
    std::vector<std::size_t> pos(part->size());
    for (std::size_t e = 0; e < part->size(); ++e) pos[e] = position(part->label(e));
    for (std::size_t r = 0; r < z.rows(); ++r, ++row) {
      for (std::size_t e = 0; e < part->size(); ++e) {
        if (z.get(r, e)) gen.set(row, pos[e], true);
      }
    }
  }
  // After reduction, rows pivoting outside the shared block vanish on it and
  // span exactly the sums that cancel on the shared labels.
  const auto pivots = gen.row_reduce();
  std::vector<std::size_t> keep_cols(result_labels.size());
  for (std::size_t j = 0; j < keep_cols.size(); ++j) keep_cols[j] = s + j;
  std::size_t first = 0;
  while (first < pivots.size() && pivots[first] < s) ++first;
  GF2Matrix cycles(pivots.size() - first, result_labels.size());
  for (std::size_t r = first; r < pivots.size(); ++r) {
    for (std::size_t j = 0; j < result_labels.size(); ++j) {
      if (gen.get(r, s + j)) cycles.set(r - first, j, true);
    }
  }
  return Matroid::from_cycle_space(cycles, std::move(result_labels));
}

Matroid three_sum(const Matroid& m1, const Matroid& m2, bool strict) {
  if (m1.size() < 7 || m2.size() < 7) {
    throw MatroidError(ErrorCode::kSumSize, "3-sum parts need at least 7 elements each");
  }
  const auto shared = shared_labels(m1, m2);
  if (shared.size() != 3) {
    throw MatroidError(ErrorCode::kSumIntersection,
                       "3-sum parts must share exactly 3 elements, got " +
                           std::to_string(shared.size()));
  }
  for (const auto* part : {&m1, &m2}) {
    const ElementSet t = part->subset(shared);
    if (!is_circuit(*part, t)) {
      throw MatroidError(ErrorCode::kNotATriangle, "shared elements are not a triangle");
    }
    if (strict && rank_of(*part, part->ground() - t) < part->rank()) {
      throw MatroidError(ErrorCode::kStrictness, "shared triangle contains a cocircuit");
    }
  }
  return delta_sum(m1, m2);
}

namespace {

std::vector<std::string> fresh_labels(const Matroid& m, std::string_view prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t k = 1; out.size() < count; ++k) {
    std::string l = std::string(prefix) + std::to_string(k);
    if (!m.find(l)) out.push_back(std::move(l));
  }
  return out;
}

// Columns of `source` rearranged into `order` (labels of source).
Matroid reorder(const Matroid& source, const std::vector<std::string>& order) {
  std::vector<std::uint64_t> cols;
  cols.reserve(order.size());
  for (const auto& l : order) cols.push_back(source.column(source.index(l)));
  return Matroid::from_columns(order, cols);
}

}  // namespace

Matroid delta_y(const Matroid& m, ElementSet triangle) {
  if (triangle.size() != 3 || !is_circuit(m, triangle)) {
    throw MatroidError(ErrorCode::kNotATriangle, "delta-Y needs a triangle");
  }
  const auto t = m.labels_of(triangle);
  const auto hub = fresh_labels(m, "#y", 3);
  // In the K4 copy the triangle is the rim r1 r2 r3 (r_i joins rim vertices i
  // and i+1) and the new triad is the star s1 s2 s3 at the hub.
  const Matroid k4 = relabel(wheel(3), {hub[0], hub[1], hub[2], t[0], t[1], t[2]});
  Matroid summed = delta_sum(k4, m);
  // Spoke s_i takes the name of the triangle edge opposite rim vertex i.
  std::vector<std::string> names = summed.labels();
  for (auto& l : names) {
    if (l == hub[0]) l = t[1];
    else if (l == hub[1]) l = t[2];
    else if (l == hub[2]) l = t[0];
  }
  return reorder(relabel(summed, std::move(names)), m.labels());
}

Matroid y_delta(const Matroid& m, ElementSet triad) {
  if (triad.size() != 3 || !is_cocircuit(m, triad)) {
    throw MatroidError(ErrorCode::kNotATriad, "Y-delta needs a triad");
  }
  return dual(delta_y(dual(m), triad));
}

Matroid parallel_add(const Matroid& m, std::size_t e, std::string new_label) {
  if (e >= m.size()) throw MatroidError(ErrorCode::kInvalidArgument, "element out of range");
  std::vector<std::string> labels = m.labels();
  labels.push_back(std::move(new_label));
  std::vector<std::uint64_t> cols = m.columns();
  cols.push_back(m.column(e));
  return Matroid::from_columns(std::move(labels), cols);
}

ThreeSumParts decompose_3sep(const Matroid& m, const Separation& sep, int tag) {
  if (sep.side1.intersects(sep.side2) || (sep.side1 | sep.side2) != m.ground() ||
      sep.side1.empty() || sep.side2.empty()) {
    throw MatroidError(ErrorCode::kNotExactSeparation, "sides do not partition the ground set");
  }
  if (connectivity(m, sep.side1) != 2) {
    throw MatroidError(ErrorCode::kNotExactSeparation, "separation is not exact of order 3");
  }
  if (sep.side1.size() < 4 || sep.side2.size() < 4) {
    throw MatroidError(ErrorCode::kSeparationSideTooSmall, "both sides need at least 4 elements");
  }

  LinearBasis b1, b2;
  for (auto e : sep.side1) b1.insert(m.column(e));
  for (auto e : sep.side2) b2.insert(m.column(e));
  const auto v1 = b1.vectors();
  const auto v2 = b2.vectors();

  // Each dependency between the two bases yields a vector of the
  // intersection of the spans.
  LinearBasis joint;
  for (std::size_t i = 0; i < v1.size(); ++i) joint.insert(v1[i], std::uint64_t{1} << i);
  std::vector<std::uint64_t> common;
  for (std::size_t j = 0; j < v2.size(); ++j) {
    std::uint64_t combo = std::uint64_t{1} << (v1.size() + j);
    if (joint.reduce(v2[j], combo) == 0) {
      std::uint64_t w = 0;
      for (std::size_t i = 0; i < v1.size(); ++i) {
        if ((combo >> i) & 1U) w ^= v1[i];
      }
      common.push_back(w);
    } else {
      joint.insert(v2[j], std::uint64_t{1} << (v1.size() + j));
    }
  }
  if (common.size() != 2) {
    throw MatroidError(ErrorCode::kNotExactSeparation, "span intersection is not 2-dimensional");
  }

  const std::string suffix = "#" + std::to_string(tag);
  ThreeSumParts parts;
  parts.triangle = {"t1" + suffix, "t2" + suffix, "t3" + suffix};
  const std::uint64_t glue[3] = {common[0], common[1], common[0] ^ common[1]};
  auto build = [&](ElementSet side) {
    std::vector<std::string> labels = m.labels_of(side);
    std::vector<std::uint64_t> cols;
    for (auto e : side) cols.push_back(m.column(e));
    for (int i = 0; i < 3; ++i) {
      labels.push_back(parts.triangle[static_cast<std::size_t>(i)]);
      cols.push_back(glue[i]);
    }
    return Matroid::from_columns(std::move(labels), cols);
  };
  parts.first = build(sep.side1);
  parts.second = build(sep.side2);
  return parts;
}

std::vector<Fan> find_undesired_fans(const Matroid& m, ElementSet regular) {
  std::vector<Fan> out;
  const auto tri = triangles(m);
  const auto tds = triads(m);
  for (auto t : tri) {
    for (auto d : tds) {
      const ElementSet core = t & d;
      if (core.intersects(regular)) out.push_back(Fan{t, d, core});
    }
  }
  return out;
}

std::vector<Fan> find_undesired_fans(const Matroid& m) {
  if (!is_3connected(m)) {
    throw MatroidError(ErrorCode::kNotThreeConnected, "fan scan needs a 3-connected matroid");
  }
  return find_undesired_fans(m, regular_elements(m));
}

Matroid contract_fan_apex(const Matroid& m, const Fan& fan) {
  if (m.size() < 10) {
    throw MatroidError(ErrorCode::kFanPrecondition, "needs at least 10 elements");
  }
  if (fan.triangle.size() != 3 || !is_circuit(m, fan.triangle) || fan.triad.size() != 3 ||
      !is_cocircuit(m, fan.triad) || fan.core != (fan.triangle & fan.triad)) {
    throw MatroidError(ErrorCode::kFanPrecondition, "not a triangle/triad pair");
  }
  const ElementSet apex = fan.triad - fan.triangle;
  if (apex.size() != 1) {
    throw MatroidError(ErrorCode::kFanPrecondition, "triad must have one element off the triangle");
  }
  if (!fan.core.intersects(regular_elements(m))) {
    throw MatroidError(ErrorCode::kFanPrecondition, "fan is not undesired");
  }
  return contract_elements(m, apex);
}

}  // namespace binmat
