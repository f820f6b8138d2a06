#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trispec/bitset.hpp"
#include "trispec/poset_space.hpp"
#include "trispec/report.hpp"

namespace trispec {

/// A finite topological space given by its full family of closed sets.
struct FiniteTopology {
  std::vector<std::string> labels;
  /// Canonical order (popcount, then mask).
  std::vector<Mask> closed;

  std::size_t size() const { return labels.size(); }
  Mask all() const { return full_mask(size()); }
  bool is_closed(Mask s) const;
  /// Intersection of the closed sets containing s.
  Mask closure(Mask s) const;
  /// closure{p} for each point p.
  std::vector<Mask> point_closures() const;
  /// Contains the empty set and the whole space; closed under union and
  /// intersection.
  bool is_topology() const;
  bool is_t0() const;
  /// Subspace topology on `keep`, re-indexed in ascending point order.
  FiniteTopology subspace(Mask keep) const;
};

/// Closed sets = down-sets of the specialization order.
FiniteTopology topology_of(const SpecSpace& space, std::size_t cap = enumeration_cap());

/// Sorts canonically and removes duplicates.
void canonicalize(std::vector<Mask>& family);

/// Closure of a family under pairwise intersection, together with the whole
/// space (the empty intersection).
std::vector<Mask> intersection_closure(const std::vector<Mask>& family, Mask all);

/// Bits of `m` inside `keep`, packed to the positions of `keep` in order.
Mask compress(Mask m, Mask keep);

/// Checks that map (source point -> target point) is injective and carries
/// the source topology onto the subspace topology of its image. Facts record
/// injectivity, embedding, and surjectivity; a homeomorphism is an embedding
/// that is also surjective.
Report check_immersion(const FiniteTopology& source, const FiniteTopology& target,
                       const std::vector<std::size_t>& map, bool require_surjective = false);

}  // namespace trispec
