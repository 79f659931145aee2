#pragma once

#include <optional>
#include <string>
#include <vector>

#include "binmat/matroid.hpp"

namespace binmat {

/// Bijection from the elements of one matroid to another: image[i] is the
/// index in the target of source element i.
struct Isomorphism {
  std::vector<std::size_t> image;
};

/// Searches for a bijection E(m) -> E(n) carrying cycles onto cycles.
///
/// Cheap invariants (size, rank, per-element circuit and cocircuit counts up to
/// size four) filter first; the search then assigns images to an ordered basis
/// of m and checks that every flat spanned by a prefix of the basis has the
/// same coordinates on both sides.
std::optional<Isomorphism> is_isomorphic(const Matroid& m, const Matroid& n);

/// Whether `map` really is an isomorphism (every circuit maps to a circuit).
bool verify_isomorphism(const Matroid& m, const Matroid& n, const Isomorphism& map);

/// m \ deleted / contracted, with `contracted` independent in m.
struct MinorWitness {
  std::vector<std::string> deleted;
  std::vector<std::string> contracted;
};

Matroid apply_minor(const Matroid& m, const MinorWitness& w);

/// Finds deletion and contraction sets realizing a copy of n as a minor of m.
std::optional<MinorWitness> has_minor(const Matroid& m, const Matroid& n);

/// Rank-preserving single-element extensions of m, one per isomorphism class.
/// The new element is labelled by fresh_label(m). With `simple_only`, m must
/// be simple and only points not parallel to an existing column are tried.
std::vector<Matroid> single_element_extensions(const Matroid& m, bool simple_only = true);

/// Per-element invariant used to prune isomorphism search; exposed for the
/// enumeration code, which buckets matroids by its sorted multiset.
struct ElementSignature {
  std::uint32_t parallel_class = 0;
  std::uint32_t series_class = 0;
  std::uint32_t triangles = 0;
  std::uint32_t quads = 0;
  std::uint32_t triads = 0;
  std::uint32_t coquads = 0;
  friend auto operator<=>(const ElementSignature&, const ElementSignature&) = default;
};

std::vector<ElementSignature> element_signatures(const Matroid& m);

/// Sorted multiset of element signatures plus size and rank; equal for
/// isomorphic matroids.
struct MatroidFingerprint {
  std::size_t size = 0;
  std::size_t rank = 0;
  std::vector<ElementSignature> signatures;
  friend auto operator<=>(const MatroidFingerprint&, const MatroidFingerprint&) = default;
};

MatroidFingerprint fingerprint(const Matroid& m);

}  // namespace binmat
