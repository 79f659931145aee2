#include "binmat/isomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_set>

#include "binmat/error.hpp"

namespace binmat {

std::vector<ElementSignature> element_signatures(const Matroid& m) {
  std::vector<ElementSignature> sig(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.column(i) == 0) continue;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m.column(j) == m.column(i)) ++sig[i].parallel_class;
    }
  }
  for (auto c : circuits(m, 4)) {
    for (auto e : c) {
      if (c.size() == 3) ++sig[e].triangles;
      if (c.size() == 4) ++sig[e].quads;
    }
  }
  const Matroid d = dual(m);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.column(i) == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d.column(j) == d.column(i)) ++sig[i].series_class;
    }
  }
  for (auto c : circuits(d, 4)) {
    for (auto e : c) {
      if (c.size() == 3) ++sig[e].triads;
      if (c.size() == 4) ++sig[e].coquads;
    }
  }
  return sig;
}

MatroidFingerprint fingerprint(const Matroid& m) {
  MatroidFingerprint f{m.size(), m.rank(), element_signatures(m)};
  std::sort(f.signatures.begin(), f.signatures.end());
  return f;
}

namespace {

struct Layer {
  // (coordinates in the ordered basis, signature, element) sorted by the
  // first two fields.
  std::vector<std::tuple<std::uint64_t, ElementSignature, std::size_t>> members;
};

// Precomputed search data for the source side of an isomorphism test.
struct SourcePlan {
  std::vector<ElementSignature> sig;
  std::vector<std::size_t> basis;  // ordered basis b_0..b_{r-1}
  std::vector<Layer> layers;       // layers[k]: elements first spanned at step k
  ElementSet loops;
};

SourcePlan make_plan(const Matroid& m, std::vector<ElementSignature> sig) {
  SourcePlan plan;
  plan.sig = std::move(sig);
  std::map<ElementSignature, std::size_t> frequency;
  for (const auto& s : plan.sig) ++frequency[s];

  plan.loops = binmat::loops(m);
  LinearBasis span;
  ElementSet covered = plan.loops;
  for (std::size_t k = 0; k < m.rank(); ++k) {
    std::size_t best = m.size();
    std::size_t best_gain = 0, best_freq = 0;
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (covered.contains(e)) continue;
      LinearBasis trial = span;
      trial.insert(m.column(e));
      std::size_t gain = 0;
      for (std::size_t x = 0; x < m.size(); ++x) {
        if (!covered.contains(x) && trial.contains(m.column(x))) ++gain;
      }
      const std::size_t freq = frequency[plan.sig[e]];
      if (best == m.size() || gain > best_gain || (gain == best_gain && freq < best_freq)) {
        best = e;
        best_gain = gain;
        best_freq = freq;
      }
    }
    span.insert(m.column(best), std::uint64_t{1} << k);
    plan.basis.push_back(best);
    Layer layer;
    for (std::size_t x = 0; x < m.size(); ++x) {
      if (covered.contains(x)) continue;
      std::uint64_t coords = 0;
      if (span.reduce(m.column(x), coords) == 0) {
        layer.members.emplace_back(coords, plan.sig[x], x);
        covered.insert(x);
      }
    }
    std::sort(layer.members.begin(), layer.members.end());
    plan.layers.push_back(std::move(layer));
  }
  return plan;
}

class Search {
 public:
  Search(const Matroid& target, const std::vector<ElementSignature>& target_sig,
         const SourcePlan& plan)
      : n_(target), sig_(target_sig), plan_(plan), image_(plan.sig.size(), 0) {}

  bool run() {
    // Loops pair up arbitrarily.
    std::vector<std::size_t> src, dst;
    for (auto e : plan_.loops) src.push_back(e);
    for (std::size_t f = 0; f < n_.size(); ++f) {
      if (n_.column(f) == 0) dst.push_back(f);
    }
    if (src.size() != dst.size()) return false;
    for (std::size_t i = 0; i < src.size(); ++i) image_[src[i]] = dst[i];
    covered_ = binmat::loops(n_);
    return extend(0, LinearBasis{});
  }

  const std::vector<std::size_t>& image() const { return image_; }

 private:
  bool extend(std::size_t k, const LinearBasis& span) {
    if (k == plan_.basis.size()) return covered_ == n_.ground();
    const std::size_t b = plan_.basis[k];
    const Layer& want = plan_.layers[k];
    for (std::size_t f = 0; f < n_.size(); ++f) {
      if (covered_.contains(f) || sig_[f] != plan_.sig[b]) continue;
      LinearBasis next = span;
      next.insert(n_.column(f), std::uint64_t{1} << k);
      Layer got;
      for (std::size_t x = 0; x < n_.size(); ++x) {
        if (covered_.contains(x)) continue;
        std::uint64_t coords = 0;
        if (next.reduce(n_.column(x), coords) == 0) got.members.emplace_back(coords, sig_[x], x);
      }
      if (got.members.size() != want.members.size()) continue;
      std::sort(got.members.begin(), got.members.end());
      bool same = true;
      for (std::size_t i = 0; i < got.members.size() && same; ++i) {
        same = std::get<0>(got.members[i]) == std::get<0>(want.members[i]) &&
               std::get<1>(got.members[i]) == std::get<1>(want.members[i]);
      }
      if (!same) continue;
      const ElementSet saved = covered_;
      for (std::size_t i = 0; i < got.members.size(); ++i) {
        image_[std::get<2>(want.members[i])] = std::get<2>(got.members[i]);
        covered_.insert(std::get<2>(got.members[i]));
      }
      if (extend(k + 1, next)) return true;
      covered_ = saved;
    }
    return false;
  }

  const Matroid& n_;
  const std::vector<ElementSignature>& sig_;
  const SourcePlan& plan_;
  std::vector<std::size_t> image_;
  ElementSet covered_;
};

// Target of repeated isomorphism tests, with invariants computed once.
struct PreparedTarget {
  explicit PreparedTarget(const Matroid& target)
      : matroid(target), sig(element_signatures(target)), sorted(sig) {
    std::sort(sorted.begin(), sorted.end());
  }
  const Matroid& matroid;
  std::vector<ElementSignature> sig;
  std::vector<ElementSignature> sorted;
};

std::optional<Isomorphism> isomorphism_to(const PreparedTarget& target, const Matroid& m) {
  const Matroid& n = target.matroid;
  if (m.size() != n.size() || m.rank() != n.rank()) return std::nullopt;
  auto sig = element_signatures(m);
  auto sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != target.sorted) return std::nullopt;
  const SourcePlan plan = make_plan(m, std::move(sig));
  Search search(n, target.sig, plan);
  if (!search.run()) return std::nullopt;
  return Isomorphism{search.image()};
}

}  // namespace

std::optional<Isomorphism> is_isomorphic(const Matroid& m, const Matroid& n) {
  if (m.size() != n.size() || m.rank() != n.rank()) return std::nullopt;
  return isomorphism_to(PreparedTarget(n), m);
}

bool verify_isomorphism(const Matroid& m, const Matroid& n, const Isomorphism& map) {
  if (m.size() != n.size() || m.rank() != n.rank() || map.image.size() != m.size()) {
    return false;
  }
  std::vector<bool> hit(n.size(), false);
  for (auto f : map.image) {
    if (f >= n.size() || hit[f]) return false;
    hit[f] = true;
  }
  // Equal dimensions, so mapping a basis of cycles into cycles suffices.
  const GF2Matrix z = cycle_space(m);
  for (std::size_t r = 0; r < z.rows(); ++r) {
    ElementSet image;
    for (auto e : ElementSet(z.row_mask(r))) image.insert(map.image[e]);
    if (!is_cycle(n, image)) return false;
  }
  return true;
}

Matroid apply_minor(const Matroid& m, const MinorWitness& w) {
  const ElementSet c = m.subset(w.contracted);
  const ElementSet d = m.subset(w.deleted);
  if (c.intersects(d)) {
    throw MatroidError(ErrorCode::kInvalidArgument, "deleted and contracted sets overlap");
  }
  const Matroid contracted = contract_elements(m, c);
  return delete_elements(contracted, contracted.subset(w.deleted));
}

namespace {

double choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

double search_cost(const Matroid& m, const Matroid& n) {
  const std::size_t k = m.rank() - n.rank();
  const std::size_t rest = m.size() - k;
  const double pool = is_simple(n)
      ? std::min<double>(std::ldexp(1.0, static_cast<int>(n.rank())) - 1, static_cast<double>(rest))
      : static_cast<double>(rest);
  return choose(m.size(), k) * std::max(1.0, choose(static_cast<std::size_t>(pool), n.size()));
}

// Witness (deleted, contracted) as index sets of m.
std::optional<std::pair<ElementSet, ElementSet>> minor_search(const Matroid& m,
                                                              const Matroid& n) {
  const std::size_t k = m.rank() - n.rank();
  const PreparedTarget target(n);
  const bool simple_target = is_simple(n);
  std::unordered_set<std::uint64_t> seen_flats;
  std::optional<std::pair<ElementSet, ElementSet>> found;

  for_each_subset_of_size(m.ground(), k, [&](ElementSet c) -> bool {
    LinearBasis span;
    for (auto e : c) {
      if (!span.insert(m.column(e))) return true;
    }
    if (!seen_flats.insert(closure(m, c).bits()).second) return true;

    const ElementSet rest = m.ground() - c;
    std::vector<std::uint64_t> residual(m.size(), 0);
    for (auto e : rest) residual[e] = span.reduce(m.column(e));

    ElementSet pool;
    if (simple_target) {
      std::unordered_set<std::uint64_t> used;
      for (auto e : rest) {
        if (residual[e] != 0 && used.insert(residual[e]).second) pool.insert(e);
      }
    } else {
      pool = rest;
    }
    if (pool.size() < n.size()) return true;

    for_each_subset_of_size(pool, n.size(), [&](ElementSet keep) -> bool {
      std::vector<std::uint64_t> cols;
      for (auto e : keep) cols.push_back(residual[e]);
      if (span_rank(cols) != n.rank()) return true;
      const Matroid candidate = Matroid::from_columns(m.labels_of(keep), cols);
      if (isomorphism_to(target, candidate)) {
        found = std::make_pair(m.ground() - c - keep, c);
        return false;
      }
      return true;
    });
    return !found;
  });
  return found;
}

}  // namespace

std::optional<MinorWitness> has_minor(const Matroid& m, const Matroid& n) {
  if (n.size() > m.size() || n.rank() > m.rank() || n.corank() > m.corank()) {
    return std::nullopt;
  }
  const Matroid md = dual(m);
  const Matroid nd = dual(n);
  const bool via_dual = search_cost(md, nd) < search_cost(m, n);

  ElementSet deleted, contracted;
  if (!via_dual) {
    auto w = minor_search(m, n);
    if (!w) return std::nullopt;
    std::tie(deleted, contracted) = *w;
  } else {
    // m* \ D / C = n*  <=>  m / D \ C = n.
    auto w = minor_search(md, nd);
    if (!w) return std::nullopt;
    const auto [dual_deleted, dual_contracted] = *w;
    contracted = independent_part(m, dual_deleted);
    deleted = dual_contracted | (dual_deleted - contracted);
  }
  return MinorWitness{m.labels_of(deleted), m.labels_of(contracted)};
}

std::vector<Matroid> single_element_extensions(const Matroid& m, bool simple_only) {
  if (simple_only && !is_simple(m)) {
    throw MatroidError(ErrorCode::kNotSimple, "matroid has loops or parallel elements");
  }
  if (m.rank() > 20) throw MatroidError(ErrorCode::kTooLarge, "rank too large to extend");
  const std::set<std::uint64_t> existing(m.columns().begin(), m.columns().end());
  std::vector<std::string> labels = m.labels();
  labels.push_back(fresh_label(m));

  std::vector<Matroid> classes;
  std::vector<MatroidFingerprint> prints;
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << m.rank()); ++v) {
    if (simple_only && existing.count(v) != 0) continue;
    std::vector<std::uint64_t> cols = m.columns();
    cols.push_back(v);
    Matroid ext = Matroid::from_columns(labels, cols);
    auto print = fingerprint(ext);
    bool is_new = true;
    for (std::size_t i = 0; i < classes.size() && is_new; ++i) {
      if (prints[i] == print && is_isomorphic(ext, classes[i])) is_new = false;
    }
    if (is_new) {
      classes.push_back(std::move(ext));
      prints.push_back(std::move(print));
    }
  }
  return classes;
}

}  // namespace binmat
