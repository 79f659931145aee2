#include <gtest/gtest.h>

#include <random>

#include "binmat/catalog.hpp"
#include "binmat/connectivity.hpp"
#include "binmat/error.hpp"
#include "binmat/harness.hpp"
#include "binmat/isomorphism.hpp"
#include "binmat/regularity.hpp"
#include "binmat/structure.hpp"
#include "support.hpp"

using namespace binmat;

namespace {

using LabelSet = std::set<std::string>;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const MatroidError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no MatroidError thrown";
  return ErrorCode::kInvalidArgument;
}

// {C1 xor C2 : C_i a cycle of m_i, C1 and C2 agree on the shared labels}.
std::set<LabelSet> delta_sum_oracle(const Matroid& m1, const Matroid& m2) {
  const auto z1 = oracle::labelled_cycles(m1);
  const auto z2 = oracle::labelled_cycles(m2);
  LabelSet shared;
  for (const auto& l : m1.labels()) {
    if (m2.find(l)) shared.insert(l);
  }
  std::set<LabelSet> out;
  for (const auto& c1 : z1) {
    for (const auto& c2 : z2) {
      LabelSet a, b;
      for (const auto& l : c1) {
        if (shared.count(l)) a.insert(l);
      }
      for (const auto& l : c2) {
        if (shared.count(l)) b.insert(l);
      }
      if (a != b) continue;
      LabelSet x;
      std::set_symmetric_difference(c1.begin(), c1.end(), c2.begin(), c2.end(),
                                    std::inserter(x, x.end()));
      out.insert(std::move(x));
    }
  }
  return out;
}

// Wheel on `r` spokes whose triangle {s1, r1, s2} is renamed to `t` and whose
// other elements get `prefix`.
Matroid glued_wheel(std::size_t r, const std::vector<std::string>& t, const std::string& prefix) {
  const Matroid w = wheel(r);
  std::vector<std::string> labels;
  for (const auto& l : w.labels()) {
    if (l == "s1") labels.push_back(t[0]);
    else if (l == "r1") labels.push_back(t[1]);
    else if (l == "s2") labels.push_back(t[2]);
    else labels.push_back(prefix + l);
  }
  return relabel(w, labels);
}

struct SumCase {
  Matroid m1;
  Matroid m2;
};

std::vector<SumCase> sum_cases() {
  std::vector<SumCase> out;
  for (const char* core : {"F7", "S8", "F7*", "P9"}) {
    const Matroid& m = catalog::get(core);
    for (auto t : triangles(m)) {
      const auto tl = m.labels_of(t);
      for (std::size_t r : {4, 5}) {
        if (m.size() + 2 * r - 6 > 12) continue;
        out.push_back({m, glued_wheel(r, tl, "w")});
      }
    }
  }
  return out;
}

}  // namespace

TEST(DeltaSum, CycleSpaceMatchesBruteForceOnThreeSums) {
  for (const auto& c : sum_cases()) {
    const Matroid s = three_sum(c.m1, c.m2);
    ASSERT_LE(s.size(), 12U);
    EXPECT_EQ(oracle::labelled_cycles(s), delta_sum_oracle(c.m1, c.m2));
  }
}

TEST(DeltaSum, CycleSpaceMatchesBruteForceOnRandomPairs) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t shared = 1 + trial % 3;
    Matroid a = gen::random_matroid(rng, 3, 6);
    Matroid b = gen::random_matroid(rng, 3, 6);
    auto la = gen::labels(6, "a");
    auto lb = gen::labels(6, "b");
    for (std::size_t i = 0; i < shared; ++i) lb[i] = la[i];
    a = relabel(a, la);
    b = relabel(b, lb);
    const Matroid s = delta_sum(a, b);
    EXPECT_EQ(oracle::labelled_cycles(s), delta_sum_oracle(a, b));
    // Elements of m1 first, then m2, each in their own order.
    std::vector<std::string> expected(la.begin() + static_cast<long>(shared), la.end());
    expected.insert(expected.end(), lb.begin() + static_cast<long>(shared), lb.end());
    EXPECT_EQ(s.labels(), expected);
  }
}

TEST(DeltaSum, DisjointGroundSetsGiveDirectSum) {
  const Matroid a = relabel(catalog::get("F7"), gen::labels(7, "a"));
  const Matroid b = relabel(catalog::get("W3"), gen::labels(6, "b"));
  const Matroid s = delta_sum(a, b);
  EXPECT_EQ(s.rank(), a.rank() + b.rank());
  EXPECT_EQ(connectivity(s, s.subset(std::span<const std::string>(a.labels()))), 0U);
  EXPECT_EQ(code_of([&] { delta_sum(a, a); }), ErrorCode::kEmptyGroundSet);
}

TEST(ThreeSum, Preconditions) {
  const Matroid& f7 = catalog::get("F7");
  const auto t = f7.labels_of(triangles(f7).front());
  EXPECT_EQ(code_of([&] { three_sum(f7, glued_wheel(3, t, "w")); }), ErrorCode::kSumSize);
  const Matroid far = relabel(wheel(4), gen::labels(8, "z"));
  EXPECT_EQ(code_of([&] { three_sum(f7, far); }), ErrorCode::kSumIntersection);
  // Three shared labels that are not a triangle of F7.
  std::vector<std::string> not_triangle;
  for (const auto& l : f7.labels()) {
    if (not_triangle.size() == 2) break;
    not_triangle.push_back(l);
  }
  for (const auto& l : f7.labels()) {
    const ElementSet s = f7.subset(std::vector<std::string>{not_triangle[0], not_triangle[1], l});
    if (s.size() == 3 && !is_circuit(f7, s)) {
      not_triangle.push_back(l);
      break;
    }
  }
  EXPECT_EQ(code_of([&] { three_sum(f7, glued_wheel(4, not_triangle, "w")); }),
            ErrorCode::kNotATriangle);
}

TEST(ThreeSum, StrictRejectsTriangleHoldingACocircuit) {
  // K4 on a b c d plus a vertex x joined to a and b; the triangle
  // {ab, ax, bx} contains the bond {ax, bx}.
  const std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 4}, {1, 4}, {0, 2},
                                                  {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<std::uint64_t> cols;
  for (auto [u, v] : edges) cols.push_back((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
  const Matroid& f7 = catalog::get("F7");
  const auto t = f7.labels_of(triangles(f7).front());
  const Matroid g = Matroid::from_columns({t[0], t[1], t[2], "g1", "g2", "g3", "g4", "g5"}, cols);
  ASSERT_TRUE(is_circuit(g, g.subset(std::span<const std::string>(t))));
  EXPECT_NO_THROW(three_sum(f7, g));
  EXPECT_EQ(code_of([&] { three_sum(f7, g, true); }), ErrorCode::kStrictness);
  EXPECT_NO_THROW(three_sum(f7, glued_wheel(4, t, "w"), true));
}

// Both directions of the correspondence between exact 3-separations with
// sides >= 4 and 3-sums.
TEST(Decompose, RoundTripsEveryBalancedSeparationOfTheCatalog) {
  std::size_t checked = 0;
  for (const auto& name : catalog::names()) {
    const Matroid& m = catalog::get(name);
    if (m.size() > 12) continue;
    for (const auto& sep : separations(m, 3, true)) {
      if (sep.side1.size() < 4 || sep.side2.size() < 4) continue;
      const auto parts = decompose_3sep(m, sep);
      const LabelSet t(parts.triangle.begin(), parts.triangle.end());
      EXPECT_EQ(parts.first.size(), sep.side1.size() + 3);
      EXPECT_TRUE(is_circuit(parts.first, parts.first.subset(std::span<const std::string>(
                                              std::vector<std::string>(t.begin(), t.end())))));
      EXPECT_EQ(three_sum(parts.first, parts.second), m) << name;
      ++checked;
    }
  }
  EXPECT_GT(checked, 20U);
}

TEST(Decompose, SumsYieldExactSeparations) {
  for (const auto& c : sum_cases()) {
    const Matroid s = three_sum(c.m1, c.m2);
    std::vector<std::string> only1;
    for (const auto& l : c.m1.labels()) {
      if (!c.m2.find(l)) only1.push_back(l);
    }
    const ElementSet x1 = s.subset(only1);
    EXPECT_EQ(connectivity(s, x1), 2U);
    EXPECT_GE(x1.size(), 4U);
    EXPECT_GE(s.size() - x1.size(), 4U);
  }
}

TEST(Decompose, Preconditions) {
  const Matroid& p9 = catalog::get("P9");
  Separation bad;
  bad.side1 = triangles(p9).front();
  bad.side2 = p9.ground() - bad.side1;
  EXPECT_EQ(code_of([&] { decompose_3sep(p9, bad); }), ErrorCode::kSeparationSideTooSmall);
  Separation overlap{p9.subset({"1", "2", "3", "4"}), p9.ground()};
  EXPECT_EQ(code_of([&] { decompose_3sep(p9, overlap); }), ErrorCode::kNotExactSeparation);
  const Matroid& e5 = catalog::get("E5");
  Separation inexact;
  inexact.side1 = ElementSet::first(5);
  inexact.side2 = e5.ground() - inexact.side1;
  EXPECT_EQ(code_of([&] { decompose_3sep(e5, inexact); }), ErrorCode::kNotExactSeparation);
}

TEST(DeltaY, TriangleBecomesTriadAndBack) {
  for (const char* name : {"F7", "S8", "P9", "W4", "W5", "F7*"}) {
    const Matroid& m = catalog::get(name);
    for (auto t : triangles(m)) {
      const Matroid y = delta_y(m, t);
      EXPECT_EQ(y.labels(), m.labels());
      EXPECT_EQ(y.rank(), m.rank() + 1);
      EXPECT_TRUE(is_cocircuit(y, t)) << name;
      EXPECT_EQ(y_delta(y, t), m) << name;
    }
  }
  // K4 with a triangle replaced by a star is K_{2,3}: rank 4 with three
  // series pairs.
  const Matroid& k4 = catalog::get("W3");
  const Matroid k23 = delta_y(k4, triangles(k4).front());
  EXPECT_EQ(k23.rank(), 4U);
  EXPECT_EQ(cosimplify(k23).matroid.size(), 3U);
  EXPECT_EQ(code_of([&] { delta_y(k4, k4.subset({"s1", "s2", "s3"})); }),
            ErrorCode::kNotATriangle);
  EXPECT_EQ(code_of([&] { y_delta(k4, triangles(k4).front()); }), ErrorCode::kNotATriad);
}

// Replacing T by a triad on both sides and dualizing gives the dual sum.
TEST(DeltaY, DualOfThreeSumIsSumOfDualizedDeltaYParts) {
  for (const auto& c : sum_cases()) {
    const auto shared = shared_labels(c.m1, c.m2);
    const ElementSet t1 = c.m1.subset(shared);
    const ElementSet t2 = c.m2.subset(shared);
    const Matroid n1 = dual(delta_y(c.m1, t1));
    const Matroid n2 = dual(delta_y(c.m2, t2));
    EXPECT_EQ(dual(three_sum(c.m1, c.m2)), three_sum(n1, n2));
  }
}

TEST(ParallelAdd, CreatesParallelPair) {
  const Matroid& f7 = catalog::get("F7");
  const Matroid p = parallel_add(f7, f7.index("1"), "p");
  EXPECT_TRUE(is_circuit(p, p.subset({"1", "p"})));
  EXPECT_EQ(p, catalog::get("F7P"));
}

namespace {

std::vector<Matroid> nonregular_pool() {
  std::vector<Matroid> out;
  for (const auto& m : gen::three_connected_pool()) {
    if (!is_regular(m).regular) out.push_back(m);
  }
  for (const auto& fx : composed_fixtures()) out.push_back(fx.matroid);
  return out;
}

}  // namespace

TEST(Fans, UndesiredFanCoreIsRegular) {
  std::size_t fans = 0;
  for (const auto& m : nonregular_pool()) {
    if (m.size() < 8) continue;
    const ElementSet r = regular_elements(m);
    for (const auto& fan : find_undesired_fans(m)) {
      ASSERT_TRUE(fan.core.intersects(r));
      if (fan.core.size() != 2) continue;
      const ElementSet side = fan.triangle | fan.triad;
      if (side.size() != 4 || connectivity(m, side) != 2) continue;
      ++fans;
      EXPECT_TRUE(fan.core.is_subset_of(r));
      const ElementSet f = fan.triad - fan.triangle;
      const Matroid mf = contract_elements(m, f);
      EXPECT_TRUE(is_3connected(mf));
      ASSERT_FALSE(is_regular(mf).regular);
      const ElementSet rf = regular_elements(mf);
      for (auto e : fan.core) EXPECT_TRUE(rf.contains(mf.index(m.label(e))));
    }
  }
  EXPECT_GT(fans, 0U);
}

TEST(Fans, ContractingTheApexKeepsRegularElementsFromTenElementsOn) {
  std::size_t seen = 0;
  for (const auto& m : nonregular_pool()) {
    if (m.size() < 10) continue;
    const ElementSet r = regular_elements(m);
    for (const auto& fan : find_undesired_fans(m, r)) {
      if ((fan.triad - fan.triangle).size() != 1) continue;
      ++seen;
      const Matroid mf = contract_fan_apex(m, fan);
      EXPECT_TRUE(is_3connected(mf));
      ASSERT_FALSE(is_regular(mf).regular);
      EXPECT_EQ(mf.labels_of(regular_elements(mf)), m.labels_of(r));
    }
  }
  EXPECT_GT(seen, 0U);
}

TEST(Fans, ContractApexPreconditions) {
  const Matroid& s8 = catalog::get("S8");
  const auto fans = find_undesired_fans(s8);
  ASSERT_FALSE(fans.empty());
  EXPECT_EQ(code_of([&] { contract_fan_apex(s8, fans.front()); }), ErrorCode::kFanPrecondition);
  for (const auto& m : nonregular_pool()) {
    if (m.size() < 10) continue;
    auto big = find_undesired_fans(m);
    if (big.empty()) continue;
    Fan bent = big.front();
    bent.triad = bent.triangle;
    EXPECT_EQ(code_of([&] { contract_fan_apex(m, bent); }), ErrorCode::kFanPrecondition);
    break;
  }
  EXPECT_EQ(code_of([&] { find_undesired_fans(catalog::get("F7P")); }),
            ErrorCode::kNotThreeConnected);
  EXPECT_EQ(code_of([&] { find_undesired_fans(wheel(4)); }), ErrorCode::kNotApplicable);
}

// Lifting N by a row 1_{e,e'} and a new unit column f keeps e and e' regular.
TEST(Fans, LiftAlongTriadKeepsRegularPair) {
  std::size_t lifts = 0;
  for (const auto& n : nonregular_pool()) {
    if (n.rank() >= 63) continue;
    const ElementSet r = regular_elements(n);
    const auto tds = triads(n);
    for (auto t : triangles(n)) {
      const ElementSet pair = t & r;
      if (pair.size() < 2) continue;
      const auto idx = pair.indices();
      const ElementSet ee{idx[0], idx[1]};
      const bool in_triad =
          std::any_of(tds.begin(), tds.end(), [&](ElementSet d) { return ee.is_subset_of(d); });
      if (in_triad) continue;
      std::vector<std::uint64_t> cols = n.columns();
      const std::uint64_t y = std::uint64_t{1} << n.rank();
      for (auto e : ee) cols[e] |= y;
      cols.push_back(y);
      auto labels = n.labels();
      labels.push_back(fresh_label(n, "f"));
      const Matroid m = Matroid::from_columns(labels, cols);
      const std::size_t f = m.size() - 1;
      ASSERT_EQ(contract_elements(m, ElementSet::single(f)), n);
      if (!is_cocircuit(m, ee.with(f))) continue;
      ++lifts;
      EXPECT_TRUE(is_3connected(m));
      ASSERT_FALSE(is_regular(m).regular);
      EXPECT_TRUE(ee.is_subset_of(regular_elements(m)));
    }
  }
  EXPECT_GT(lifts, 0U);
}

// A 3-connected 3-sum has both parts as minors.
TEST(ThreeSum, PartsAreMinorsOfAThreeConnectedSum) {
  for (const auto& c : sum_cases()) {
    const Matroid s = three_sum(c.m1, c.m2);
    if (!is_3connected(s)) continue;
    EXPECT_TRUE(has_minor(s, c.m1).has_value());
    EXPECT_TRUE(has_minor(s, c.m2).has_value());
  }
}

TEST(Fans, MatchExhaustiveTriangleTriadScan) {
  for (const auto& m : nonregular_pool()) {
    if (m.size() > 10) continue;
    std::set<std::pair<oracle::Mask, oracle::Mask>> expected;
    oracle::Mask r = 0;
    for (std::size_t e = 0; e < m.size(); ++e) {
      const ElementSet one = ElementSet::single(e);
      if (oracle::regular(delete_elements(m, one)) && oracle::regular(contract_elements(m, one))) {
        r |= oracle::Mask{1} << e;
      }
    }
    const auto cocircuits = oracle::cocircuits(m);
    for (auto t : oracle::circuits(m)) {
      if (oracle::popcount(t) != 3) continue;
      for (auto d : cocircuits) {
        if (oracle::popcount(d) == 3 && (t & d & r) != 0) expected.insert({t, d});
      }
    }
    std::set<std::pair<oracle::Mask, oracle::Mask>> got;
    for (const auto& fan : find_undesired_fans(m)) {
      EXPECT_EQ(fan.core, fan.triangle & fan.triad);
      got.insert({fan.triangle.bits(), fan.triad.bits()});
    }
    EXPECT_EQ(got, expected);
  }
  // P9's only triad {3, 4, 7} misses R(P9) = {1, 2, 5, 6}.
  EXPECT_TRUE(find_undesired_fans(catalog::get("P9")).empty());
  EXPECT_EQ(find_undesired_fans(catalog::get("S8")).size(), 3U);
}
