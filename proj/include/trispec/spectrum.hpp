#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trispec/bitset.hpp"
#include "trispec/report.hpp"
#include "trispec/thick_lattice.hpp"
#include "trispec/topology.hpp"

namespace trispec {

/// A spectrum computed from a lattice: a set of lattice elements as points,
/// with closed sets Z(E) = { P : no object of E lies below P }.
///
/// Point sets are masks over `points` (position i is points[i]), so a
/// spectrum has at most 64 points.
struct SpectrumSpace {
  /// Lattice element index of each point, ascending.
  std::vector<std::size_t> points;
  std::vector<std::string> point_ids;
  /// Support of each object: (object element, points P with object not <= P).
  std::vector<std::pair<std::size_t, Mask>> basis;
  std::vector<Mask> closed_sets;
  /// The unique minimal strict upper bound, when it exists.
  std::vector<std::optional<std::size_t>> witness;
  /// Id of the witness element, or empty.
  std::vector<std::string> witness_ids;
  /// { Q : Q <= P } for each point P.
  std::vector<Mask> below;

  std::size_t size() const { return points.size(); }
  Mask all() const { return full_mask(size()); }
  std::optional<std::size_t> point_of(std::size_t element) const;
  FiniteTopology topology() const { return {point_ids, closed_sets}; }
  /// The specialization order on the points, as a space.
  SpecSpace as_space(std::string name = "spectrum") const;
  std::string format_set(Mask s) const;
};

/// Elements with exactly one minimal strict upper bound (read off the Hasse
/// diagram). The top element never qualifies.
std::vector<std::size_t> primes(const ThickLattice& lat);

/// The spectrum with the given elements as points. Throws CapExceeded past
/// 64 points.
SpectrumSpace spectrum_over(const ThickLattice& lat, std::vector<std::size_t> points);
SpectrumSpace spectrum(const ThickLattice& lat);

/// { P : a not <= P }, for any element a.
Mask supp(const ThickLattice& lat, const SpectrumSpace& spec, std::size_t a);

/// Closure of {P} in the closed-set family; throws std::logic_error if it
/// disagrees with { Q : Q <= P }.
Mask point_closure(const SpectrumSpace& spec, std::size_t point);
/// The same comparison for every point, plus T0.
Report verify_point_closures(const SpectrumSpace& spec);

/// Meet of the primes above a; top when there are none.
std::size_t radical(const ThickLattice& lat, const std::vector<std::size_t>& prime_elements, std::size_t a);
std::size_t radical(const ThickLattice& lat, std::size_t a);

/// { supp(a) : a in lat }, canonical order, without duplicates.
std::vector<Mask> param_set(const ThickLattice& lat, const SpectrumSpace& spec);

/// supp and W -> (largest a with supp(a) in W) are mutually inverse order
/// isomorphisms between radical elements and the parameter set.
Report verify_cls(const ThickLattice& lat);

/// Every element equals its radical.
Report verify_radicals(const ThickLattice& lat);

struct RcstResult {
  Report report;
  ThickLattice lattice;
  SpectrumSpace spectrum;
  /// Spectrum point index of phi(x), for each point x of the space.
  std::vector<std::size_t> phi;
};

/// Builds Spcl(space), sends x to the element W_x, and checks it is a
/// homeomorphism onto the spectrum.
RcstResult rcst_map(const SpecSpace& space, std::size_t cap = enumeration_cap());

struct QuotientImmersion {
  Report report;
  ThickLattice quotient_lattice;
  SpectrumSpace quotient_spectrum;
  SpectrumSpace ambient_spectrum;
  /// Ambient spectrum point index of each quotient prime.
  std::vector<std::size_t> map;
  Mask image = 0;
};

/// Spectrum of the interval above k mapped into the spectrum of lat: checks
/// injectivity, the image { P : k <= P }, and the subspace topology.
QuotientImmersion induced_immersion(const ThickLattice& lat, std::size_t k);

}  // namespace trispec
