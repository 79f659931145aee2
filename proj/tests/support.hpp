#pragma once

// Brute-force oracles and seeded generators shared by the test binaries. The
// oracles work straight from column vectors and never call the library's
// rank, circuit, connectivity or minor code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "binmat/catalog.hpp"
#include "binmat/harness.hpp"
#include "binmat/matroid.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline std::size_t vec_rank(std::vector<std::uint64_t> v) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    ++r;
    const std::uint64_t low = v[i] & (~v[i] + 1);
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[j] & low) v[j] ^= v[i];
    }
  }
  return r;
}

inline std::size_t rank(const binmat::Matroid& m, Mask x) {
  std::vector<std::uint64_t> v;
  for (std::size_t e = 0; e < m.size(); ++e) {
    if ((x >> e) & 1U) v.push_back(m.column(e));
  }
  return vec_rank(v);
}

inline std::size_t full_rank(const binmat::Matroid& m) {
  return rank(m, (Mask{1} << m.size()) - 1);
}

inline int popcount(Mask x) { return __builtin_popcountll(x); }

/// Minimal dependent sets.
inline std::set<Mask> circuits(const binmat::Matroid& m) {
  std::set<Mask> out;
  const Mask all = (Mask{1} << m.size()) - 1;
  for (Mask s = 1; s <= all; ++s) {
    const auto k = static_cast<std::size_t>(popcount(s));
    if (rank(m, s) != k - 1) continue;
    bool minimal = true;
    for (std::size_t e = 0; e < m.size() && minimal; ++e) {
      if (((s >> e) & 1U) && rank(m, s & ~(Mask{1} << e)) != k - 1) minimal = false;
    }
    if (minimal) out.insert(s);
  }
  return out;
}

/// Complements of hyperplanes: maximal sets X with r(E - X) = r - 1 whose
/// complement is closed.
inline std::set<Mask> cocircuits(const binmat::Matroid& m) {
  std::set<Mask> out;
  const Mask all = (Mask{1} << m.size()) - 1;
  const std::size_t r = full_rank(m);
  for (Mask h = 0; h < all; ++h) {
    if (rank(m, h) + 1 != r) continue;
    bool closed = true;
    for (std::size_t e = 0; e < m.size() && closed; ++e) {
      if (!((h >> e) & 1U) && rank(m, h | (Mask{1} << e)) == r - 1) closed = false;
    }
    if (closed) out.insert(all & ~h);
  }
  return out;
}

/// Supports of dependencies: sets whose columns sum to zero.
inline std::set<Mask> cycles(const binmat::Matroid& m) {
  std::set<Mask> out;
  const Mask all = (Mask{1} << m.size()) - 1;
  for (Mask s = 0; s <= all; ++s) {
    std::uint64_t sum = 0;
    for (std::size_t e = 0; e < m.size(); ++e) {
      if ((s >> e) & 1U) sum ^= m.column(e);
    }
    if (sum == 0) out.insert(s);
  }
  return out;
}

/// Cycles as label sets.
inline std::set<std::set<std::string>> labelled_cycles(const binmat::Matroid& m) {
  std::set<std::set<std::string>> out;
  for (Mask c : cycles(m)) {
    std::set<std::string> s;
    for (std::size_t e = 0; e < m.size(); ++e) {
      if ((c >> e) & 1U) s.insert(m.label(e));
    }
    out.insert(std::move(s));
  }
  return out;
}

inline std::size_t lambda(const binmat::Matroid& m, Mask x) {
  const Mask all = (Mask{1} << m.size()) - 1;
  return rank(m, x) + rank(m, all & ~x) - full_rank(m);
}

inline bool three_connected(const binmat::Matroid& m) {
  const Mask all = (Mask{1} << m.size()) - 1;
  for (Mask x = 1; x < all; ++x) {
    const auto k = static_cast<std::size_t>(popcount(x));
    const std::size_t l = lambda(m, x);
    if (l == 0) return false;
    if (l == 1 && k >= 2 && m.size() - k >= 2) return false;
  }
  return true;
}

/// Columns of a dual representation, from the null space.
inline std::vector<std::uint64_t> dual_columns(const binmat::Matroid& m) {
  const std::size_t n = m.size();
  // Rows of the representation as masks over elements.
  std::vector<std::uint64_t> rows(m.rank(), 0);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t i = 0; i < m.rank(); ++i) {
      if ((m.column(e) >> i) & 1U) rows[i] |= Mask{1} << e;
    }
  }
  // Null space by brute force over a basis of solutions: x is in it iff
  // every row has even overlap.
  std::vector<std::uint64_t> null;
  std::vector<std::uint64_t> basis;
  for (Mask x = 1; x < (Mask{1} << n) && null.size() < n - m.rank(); ++x) {
    bool ok = true;
    for (auto r : rows) ok = ok && popcount(r & x) % 2 == 0;
    if (!ok) continue;
    auto trial = basis;
    trial.push_back(x);
    if (vec_rank(trial) == trial.size()) {
      basis = trial;
      null.push_back(x);
    }
  }
  std::vector<std::uint64_t> cols(n, 0);
  for (std::size_t i = 0; i < null.size(); ++i) {
    for (std::size_t e = 0; e < n; ++e) {
      if ((null[i] >> e) & 1U) cols[e] |= std::uint64_t{1} << i;
    }
  }
  return cols;
}

/// Whether contracting some independent (r - 3)-set leaves all seven points
/// of a Fano plane occupied.
inline bool has_fano_minor_cols(const std::vector<std::uint64_t>& cols) {
  const std::size_t r = vec_rank(cols);
  if (r < 3) return false;
  const std::size_t n = cols.size();
  std::vector<std::size_t> pick(r - 3);
  bool found = false;
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (found) return;
    if (depth == pick.size()) {
      std::vector<std::uint64_t> c;
      for (auto i : pick) c.push_back(cols[i]);
      if (vec_rank(c) != c.size()) return;
      std::set<std::uint64_t> classes;
      // Quotient by span(c): reduce each column to a canonical coset
      // representative by exhaustive minimum over the span.
      std::vector<std::uint64_t> span{0};
      for (auto v : c) {
        const std::size_t s = span.size();
        for (std::size_t k = 0; k < s; ++k) span.push_back(span[k] ^ v);
      }
      for (std::size_t e = 0; e < n; ++e) {
        std::uint64_t best = cols[e];
        for (auto s : span) best = std::min(best, cols[e] ^ s);
        if (best != 0) classes.insert(best);
      }
      found = classes.size() == 7;
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return found;
}

inline bool regular(const binmat::Matroid& m) {
  return !has_fano_minor_cols(m.columns()) && !has_fano_minor_cols(dual_columns(m));
}

}  // namespace oracle

namespace gen {

inline std::vector<std::string> labels(std::size_t n, const std::string& prefix = "e") {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// n random columns of height r; may contain loops and parallel pairs.
inline binmat::Matroid random_matroid(std::mt19937_64& rng, std::size_t r, std::size_t n) {
  std::uniform_int_distribution<std::uint64_t> col(0, (std::uint64_t{1} << r) - 1);
  std::vector<std::uint64_t> cols(n);
  for (auto& c : cols) c = col(rng);
  return binmat::Matroid::from_columns(labels(n), cols);
}

/// Same matroid with elements shuffled and renamed, and the representation
/// multiplied by a random invertible matrix.
inline binmat::Matroid scramble(std::mt19937_64& rng, const binmat::Matroid& m,
                                const std::string& prefix = "q") {
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t r = m.rank();
  // Random invertible r x r matrix, as images of the unit vectors.
  std::vector<std::uint64_t> image;
  std::uniform_int_distribution<std::uint64_t> vec(1, r == 0 ? 1 : (std::uint64_t{1} << r) - 1);
  while (image.size() < r) {
    auto trial = image;
    trial.push_back(vec(rng));
    if (oracle::vec_rank(trial) == trial.size()) image = trial;
  }
  std::vector<std::uint64_t> cols;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < r; ++b) {
      if ((m.column(order[i]) >> b) & 1U) v ^= image[b];
    }
    cols.push_back(v);
    names.push_back(prefix + m.label(order[i]));
  }
  return binmat::Matroid::from_columns(names, cols);
}

/// 3-connected matroids on 7..10 elements, one per class.
inline const std::vector<binmat::Matroid>& three_connected_pool() {
  static const std::vector<binmat::Matroid> pool = [] {
    std::vector<binmat::Matroid> out;
    for (std::size_t n = 6; n <= 10; ++n) {
      for (auto& inst : binmat::enumerate_3connected(n)) out.push_back(inst.matroid);
    }
    return out;
  }();
  return pool;
}

}  // namespace gen
