#pragma once

#include <cstddef>
#include <vector>

#include "trispec/report.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/thick_lattice.hpp"

namespace trispec {

/// A classified lattice with object multiplication a (x) b = a ∩ b on the
/// underlying point sets. The unit is the whole space (the top).
class TensorLattice {
 public:
  /// Throws InputError unless `base` is classified.
  explicit TensorLattice(ThickLattice base);

  const ThickLattice& base() const { return base_; }
  std::size_t size() const { return base_.size(); }
  std::size_t unit() const { return base_.top(); }
  std::size_t mul(std::size_t a, std::size_t b) const;
  /// a^{(x) n} for n >= 1.
  std::size_t power(std::size_t a, std::size_t n) const;
  /// m (x) x <= a for every object m and every object x <= a.
  bool is_ideal(std::size_t a) const;

 private:
  ThickLattice base_;
};

TensorLattice tensor_lattice(const SpecSpace& space, std::size_t cap = enumeration_cap());

/// Proper ideals P with: c (x) d <= P implies c <= P or d <= P, over object
/// pairs.
std::vector<std::size_t> prime_ideals(const TensorLattice& tl);

/// Join of the objects m with m^{(x) n} <= a for some n >= 1.
std::size_t tensor_radical(const TensorLattice& tl, std::size_t a);
/// Meet of the prime ideals above a (top when there are none).
std::size_t prime_ideal_meet(const TensorLattice& tl, const std::vector<std::size_t>& prime_ideal_elements,
                             std::size_t a);

/// Points are the prime ideals; supports are Balmer supports.
SpectrumSpace balmer_spectrum(const TensorLattice& tl);

/// Balmer supports and their inverse are mutually inverse between radical
/// ideals and Thomason subsets of the Balmer spectrum.
Report verify_bal(const TensorLattice& tl);
/// For radical ideals: unique minimal radical strict superset <=> prime ideal.
Report verify_prid(const TensorLattice& tl);
/// Prime thick subcategories that are ideals are prime ideals, and for
/// classified models the two sets coincide.
Report verify_pp_twoprm(const TensorLattice& tl);
/// tensor_radical(a) equals the meet of the prime ideals above a.
Report verify_int(const TensorLattice& tl);
/// Closures of Balmer points are the prime ideals below them.
Report verify_cl(const TensorLattice& tl);
/// Prime ideals are exactly the complements of up-sets of points.
Report verify_balmer_points(const TensorLattice& tl);

}  // namespace trispec
