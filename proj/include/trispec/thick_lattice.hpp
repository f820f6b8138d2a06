#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trispec/bitset.hpp"
#include "trispec/poset_space.hpp"

namespace trispec {

enum class Origin { classified, explicit_covers, augmented, quotient, transported };

std::string_view origin_name(Origin o);

struct Provenance {
  Origin origin = Origin::explicit_covers;
  /// Free-form: the space name, the atom labels, the quotient element, ...
  std::string detail;
};

/// A finite lattice standing in for the lattice of thick subcategories.
///
/// Elements are stored in a linear extension of the order, so the join of a
/// and b is the first element of up(a) & up(b) and the meet is the last
/// element of down(a) & down(b). Objects are the principal elements
/// thick(M); they contain the bottom and are closed under joins.
class ThickLattice {
 public:
  ThickLattice() = default;

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  /// Throws InputError for an unknown element.
  std::size_t index_of(std::string_view id) const;
  bool contains(std::string_view id) const;

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  const Bitset& up(std::size_t a) const { return up_[a]; }
  const Bitset& down(std::size_t a) const { return down_[a]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;

  bool is_object(std::size_t a) const { return objects_.test(a); }
  const Bitset& objects() const { return objects_; }

  /// Minimal strict upper bounds, ascending.
  const std::vector<std::size_t>& upper_covers(std::size_t a) const { return upper_covers_[a]; }
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  const Provenance& provenance() const { return provenance_; }

  /// Classified lattices remember the space and each element's point set.
  bool is_classified() const { return provenance_.origin == Origin::classified; }
  const SpecSpace* space() const { return space_.get(); }
  Mask mask(std::size_t a) const { return masks_.at(a); }
  std::optional<std::size_t> element_of_mask(Mask m) const;

  /// Full check of the lattice axioms and object closure; the first
  /// violation found, if any.
  std::optional<std::string> violation() const;

  friend bool operator==(const ThickLattice& a, const ThickLattice& b) {
    return a.ids_ == b.ids_ && a.up_ == b.up_ && a.objects_ == b.objects_;
  }

  /// Rows must already be in linear-extension order and reflexive.
  static ThickLattice from_rows(std::vector<std::string> ids, std::vector<Bitset> up, Bitset objects,
                                Provenance provenance);

 private:
  friend ThickLattice from_support_data(const SpecSpace& space, std::size_t cap);

  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Bitset> up_, down_;
  std::vector<std::vector<std::size_t>> upper_covers_;
  Bitset objects_;
  std::size_t bottom_ = 0, top_ = 0;
  Provenance provenance_;
  std::shared_ptr<const SpecSpace> space_;
  std::vector<Mask> masks_;
  std::unordered_map<Mask, std::size_t> mask_index_;
};

enum class MapKind { quotient_preimage, iso };

/// forward[i] is the image in the target of source element i.
struct LatticeMap {
  std::vector<std::size_t> forward;
  MapKind kind = MapKind::iso;
};

bool is_order_preserving(const ThickLattice& source, const ThickLattice& target, const LatticeMap& map);
bool is_order_isomorphism(const ThickLattice& source, const ThickLattice& target, const LatticeMap& map);

/// Spcl(space) ordered by inclusion; every element is an object. Element ids
/// are the point sets written as "{a,b}" / "∅".
ThickLattice from_support_data(const SpecSpace& space, std::size_t cap = enumeration_cap());

/// covers are (lower, upper) pairs. bottom/top, when given, must be the
/// least/greatest elements. Throws InputError for cycles, non-lattices,
/// objects that miss the bottom or are not join-closed.
ThickLattice from_explicit(const std::vector<std::string>& elements,
                           const std::vector<std::pair<std::string, std::string>>& covers,
                           const std::vector<std::string>& objects,
                           const std::optional<std::string>& bottom = std::nullopt,
                           const std::optional<std::string>& top = std::nullopt);

/// Adds pairwise incomparable atoms strictly between bottom and top; an atom
/// joins any other nonzero proper element to top and meets it to bottom.
ThickLattice augment(const ThickLattice& base, const std::vector<std::string>& atom_labels);

/// The interval [k, top] with objects { a v k }. The map sends each quotient
/// element to the same element of `lat`.
std::pair<ThickLattice, LatticeMap> quotient(const ThickLattice& lat, std::size_t k);
std::pair<ThickLattice, LatticeMap> quotient(const ThickLattice& lat, std::string_view k);

/// Renames elements through a bijection old id -> new id. The map sends each
/// element of the new lattice to its preimage in `lat`.
std::pair<ThickLattice, LatticeMap> transport(const ThickLattice& lat,
                                              const std::map<std::string, std::string>& relabel);

}  // namespace trispec
