#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trispec/bitset.hpp"

namespace trispec {

/// Point sets are machine words, so a space holds at most this many points.
inline constexpr std::size_t kMaxPoints = 63;
inline constexpr std::size_t kDefaultEnumerationCap = 20;

/// Point cap for materializing subset families. TRISPEC_CAP overrides the
/// default of 20.
std::size_t enumeration_cap();

/// A finite T0 space stored as its specialization order.
///
/// x <= y means x lies in the closure of {y}. Closed sets are exactly the
/// down-sets of this order.
class SpecSpace {
 public:
  SpecSpace() = default;

  /// Builds the space from pairs (x, y) meaning x <= y. The pairs may be
  /// cover relations or any generating set; the transitive closure is taken.
  /// Throws InputError on duplicate or invalid names, unknown names in a
  /// pair, or a cycle.
  static SpecSpace from_relations(std::string name, std::vector<std::string> points,
                                  const std::vector<std::pair<std::string, std::string>>& leq);
  static SpecSpace from_indices(std::string name, std::vector<std::string> points,
                                const std::vector<std::pair<std::size_t, std::size_t>>& leq);

  const std::string& name() const { return name_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  Mask all() const { return full_mask(size()); }

  /// Throws InputError for an unknown point.
  std::size_t index_of(std::string_view point) const;
  bool contains(std::string_view point) const;

  bool leq(std::size_t x, std::size_t y) const { return (down_[y] >> x) & 1; }
  /// closure{y}
  Mask down(std::size_t y) const { return down_[y]; }
  Mask up(std::size_t x) const { return up_[x]; }

  /// Hasse diagram as (lower, upper) index pairs, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// Points ordered so that every point follows everything below it.
  std::vector<std::size_t> linear_extension() const;

  bool is_down_set(Mask s) const;
  /// Distinct points have distinct closures.
  bool is_t0() const;
  /// Every irreducible closed set (a down-set with a single maximal point)
  /// is the closure of exactly one point.
  bool is_sober() const;

  /// Induced subspace on the points of `keep`, in original order.
  SpecSpace restrict_to(Mask keep, std::string name = {}) const;

  /// "{a,b}" in point order, or "∅".
  std::string format_set(Mask s) const;
  Mask mask_of(const std::vector<std::string>& names) const;

  friend bool operator==(const SpecSpace& a, const SpecSpace& b) {
    return a.points_ == b.points_ && a.down_ == b.down_;
  }

 private:
  std::string name_;
  std::vector<std::string> points_;
  std::vector<Mask> down_;
  std::vector<Mask> up_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class SubsetKind { closed, spcl, thomason, arbitrary };

struct SubsetFamily {
  std::size_t ambient_size = 0;
  std::vector<Mask> members;
  SubsetKind kind = SubsetKind::arbitrary;

  std::size_t size() const { return members.size(); }
};

/// Smallest closed set containing s. Throws InputError if s names bits
/// outside the space.
Mask closure(const SpecSpace& space, Mask s);

/// All specialization-closed subsets (= down-sets = Thomason subsets for a
/// finite space) in canonical order. Throws CapExceeded above `cap` points.
SubsetFamily enumerate_spcl(const SpecSpace& space, std::size_t cap = enumeration_cap());

/// Number of down-sets, by a frontier DP over a linear extension. Does not
/// materialize the family, so it runs past the enumeration cap.
std::uint64_t count_spcl(const SpecSpace& space);

/// x -> W_x = { x' : x not in closure{x'} }, indexed by point.
std::vector<Mask> prime_spcl(const SpecSpace& space);

// Standard shapes.
SpecSpace chain_space(std::size_t n);
SpecSpace discrete_space(std::size_t n);
/// One generic point "g" over closed points x1..xn.
SpecSpace star_space(std::size_t n);
/// Product order on rows x cols, point "r{i}c{j}".
SpecSpace grid_space(std::size_t rows, std::size_t cols);

}  // namespace trispec
