#include "binmat/catalog.hpp"

#include <map>

#include "binmat/error.hpp"
#include "binmat/isomorphism.hpp"
#include "binmat/structure.hpp"

namespace binmat {

Matroid wheel(std::size_t r) {
  if (r < 3) throw MatroidError(ErrorCode::kInvalidArgument, "a wheel needs at least 3 spokes");
  if (2 * r > ElementSet::kCapacity) throw MatroidError(ErrorCode::kTooLarge, "wheel too large");
  // Vertex-edge incidence over GF(2); vertex 0 is the hub, 1..r the rim.
  GF2Matrix incidence(r + 1, 2 * r);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) {
    incidence.set(0, i, true);
    incidence.set(i + 1, i, true);
    labels.push_back("s" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < r; ++i) {
    incidence.set(i + 1, r + i, true);
    incidence.set((i + 1) % r + 1, r + i, true);
    labels.push_back("r" + std::to_string(i + 1));
  }
  return Matroid::standard_form(incidence, std::move(labels));
}

namespace catalog {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

// [I_r | A] with columns labelled 1..n.
Matroid identity_plus(const std::vector<std::vector<int>>& a) {
  const std::size_t r = a.size();
  const std::size_t extra = a.front().size();
  std::vector<std::vector<int>> rows(r, std::vector<int>(r + extra, 0));
  for (std::size_t i = 0; i < r; ++i) {
    rows[i][i] = 1;
    for (std::size_t j = 0; j < extra; ++j) rows[i][r + j] = a[i][j];
  }
  return Matroid::standard_form(GF2Matrix::from_rows(rows), numbered(r + extra));
}

Matroid other_extension(const Matroid& base, const Matroid& known) {
  for (auto& ext : single_element_extensions(base, true)) {
    if (!is_isomorphic(ext, known)) return ext;
  }
  throw MatroidError(ErrorCode::kInvalidArgument, "no second extension class");
}

std::map<std::string, Entry, std::less<>> build() {
  using P = Provenance;
  std::map<std::string, Entry, std::less<>> m;
  auto add = [&](std::string name, Matroid mat, P p) {
    m.emplace(name, Entry{name, std::move(mat), p});
  };

  const Matroid f7 = identity_plus({{1, 0, 1, 1}, {1, 1, 0, 1}, {0, 1, 1, 1}});
  const Matroid s8 = identity_plus(
      {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}});
  const Matroid p9 = identity_plus(
      {{0, 1, 1, 1, 1}, {1, 0, 1, 1, 1}, {1, 1, 0, 1, 0}, {1, 1, 1, 1, 0}});
  const Matroid s10 = identity_plus({{1, 0, 0, 1, 1, 0},
                                     {1, 1, 0, 0, 1, 1},
                                     {0, 1, 1, 0, 1, 1},
                                     {0, 0, 1, 1, 0, 1}});
  const Matroid e5 = identity_plus({{0, 1, 1, 1, 1},
                                    {1, 0, 1, 1, 0},
                                    {1, 1, 0, 1, 1},
                                    {1, 1, 1, 1, 0},
                                    {1, 1, 0, 0, 0}});
  const Matroid t12 = identity_plus({{1, 1, 0, 0, 0, 1},
                                     {1, 0, 0, 0, 1, 1},
                                     {0, 0, 0, 1, 1, 1},
                                     {0, 0, 1, 1, 1, 0},
                                     {0, 1, 1, 1, 0, 0},
                                     {1, 1, 1, 0, 0, 0}});
  const Matroid f7_dual = dual(f7);

  add("F7", f7, P::kExplicitMatrix);
  add("F7*", f7_dual, P::kDerivedConstruction);
  add("S8", s8, P::kExplicitMatrix);
  add("S8*", dual(s8), P::kDerivedConstruction);
  add("P9", p9, P::kExplicitMatrix);
  add("P9*", dual(p9), P::kDerivedConstruction);
  const Matroid ag32 = other_extension(f7_dual, s8);
  add("AG32", ag32, P::kDerivedConstruction);
  add("Z4", other_extension(s8, p9), P::kDerivedConstruction);
  add("MK4", wheel(3), P::kDerivedConstruction);
  add("E5", e5, P::kExplicitMatrix);
  add("S10", s10, P::kExplicitMatrix);
  add("S10*", dual(s10), P::kDerivedConstruction);
  add("T12", t12, P::kExplicitMatrix);
  add("F7P", parallel_add(f7, f7.index("1"), "p"), P::kDerivedConstruction);

  // The single element of S8 lying on all three triangles.
  std::vector<int> on_triangles(s8.size(), 0);
  for (auto t : triangles(s8)) {
    for (auto e : t) ++on_triangles[e];
  }
  std::size_t hub = 0;
  for (std::size_t e = 0; e < s8.size(); ++e) {
    if (on_triangles[e] >= 2) hub = e;
  }
  add("S8P", parallel_add(s8, hub, "p"), P::kDerivedConstruction);

  for (std::size_t r = 3; r <= 8; ++r) {
    add("W" + std::to_string(r), wheel(r), P::kDerivedConstruction);
  }
  return m;
}

const std::map<std::string, Entry, std::less<>>& table() {
  static const auto instance = build();
  return instance;
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> list = {
      "F7", "F7*", "S8", "S8*", "P9", "P9*", "AG32", "Z4", "MK4", "E5", "S10",
      "S10*", "T12", "F7P", "S8P", "W3", "W4", "W5", "W6", "W7", "W8"};
  return list;
}

const Entry& entry(std::string_view name) {
  const auto& t = table();
  auto it = t.find(name);
  if (it == t.end()) {
    throw MatroidError(ErrorCode::kUnknownName, "no catalog entry '" + std::string(name) + "'");
  }
  return it->second;
}

bool contains(std::string_view name) { return table().count(name) != 0; }

}  // namespace catalog
}  // namespace binmat
