#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "trispec/bitset.hpp"
#include "trispec/poset_space.hpp"
#include "trispec/thick_lattice.hpp"
#include "trispec/topology.hpp"

// Brute-force routes used to certify the fast paths. Nothing here calls the
// spectrum or enumeration code it is meant to check.
namespace trispec::oracle {

inline constexpr std::size_t kMaxScanElements = 4096;
inline constexpr std::size_t kMaxPosetPoints = 6;
inline constexpr std::size_t kMaxHomeomorphismPoints = 12;

/// Elements whose strict upper bounds have exactly one minimal member,
/// found by scanning the order relation.
std::vector<std::size_t> scan_primes(const ThickLattice& lat);

/// Specialization-closed subsets with a unique minimal specialization-closed
/// strict superset, found by scanning all subsets.
std::vector<Mask> scan_prime_subsets(const SpecSpace& space, std::size_t cap = enumeration_cap());

/// Calls fn for every partial order on n labeled points p0..p{n-1}, in a
/// fixed order. With up_to_iso only the first representative of each
/// isomorphism class is passed.
void for_each_poset(std::size_t n, bool up_to_iso, const std::function<void(const SpecSpace&)>& fn);
std::vector<SpecSpace> all_posets(std::size_t n, bool up_to_iso);

/// Lexicographically least encoding of the order over all relabelings.
std::uint64_t canonical_code(const SpecSpace& space);

/// A bijection carrying closed sets onto closed sets in both directions, if
/// one exists.
std::optional<std::vector<std::size_t>> homeomorphic(const FiniteTopology& a, const FiniteTopology& b);

/// Down-sets of the rows x cols product order, counted column by column:
/// a down-set is a non-increasing sequence of column heights.
std::uint64_t grid_downsets_transfer(std::size_t rows, std::size_t cols);

}  // namespace trispec::oracle
