#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trispec/poset_space.hpp"
#include "trispec/report.hpp"
#include "trispec/tensor.hpp"
#include "trispec/thick_lattice.hpp"

namespace trispec {

enum class LocalKind { regular, hypersurface, complete_intersection, gorenstein_non_ci, other };

/// Type of the local ring at a point. `codim` is only meaningful for
/// complete intersections and is at least 2 there.
struct LocalType {
  LocalKind kind = LocalKind::regular;
  int codim = 0;

  bool is_ci() const {
    return kind == LocalKind::regular || kind == LocalKind::hypersurface || kind == LocalKind::complete_intersection;
  }
  bool is_gorenstein() const { return kind != LocalKind::other; }
  friend bool operator==(const LocalType&, const LocalType&) = default;
};

/// "regular", "hypersurface", "ci:<c>", "gorenstein", "other".
std::string to_string(const LocalType& t);
/// Throws InputError on unknown tags or ci codimension below 2.
LocalType parse_local_type(const std::string& tag);

/// A finite scheme stand-in: a space with a local-ring type at each point.
struct SchemeModel {
  SpecSpace space;
  std::vector<LocalType> tags;
  bool separated = true;

  /// Throws InputError unless there is exactly one tag per point.
  void validate() const;
  bool gorenstein() const;
};

Mask sing_locus(const SchemeModel& m);
Mask ci_locus(const SchemeModel& m);
Mask hs_locus(const SchemeModel& m);

/// Lattice of the perfect complexes: Spcl of the whole space with its tensor
/// structure.
TensorLattice dperf_model(const SchemeModel& m, std::size_t cap = enumeration_cap());

/// Spcl of the singular locus. Throws ClassificationUnavailable unless the
/// model is separated, Gorenstein and every singular point is a
/// hypersurface.
ThickLattice dsg_model(const SchemeModel& m, std::size_t cap = enumeration_cap());

struct ImmersionResult {
  Report report;
  /// Target spectrum point for each source point.
  std::vector<std::size_t> map;
  std::size_t source_points = 0;
  std::size_t target_points = 0;
  bool homeomorphism = false;
};

/// x -> S^perf(x) into the spectrum of `lat`, which must contain every
/// point set { x' : x not <= x' } as an element id (classified or augmented
/// lattices over `space`). With require_surjective the map must also be
/// onto.
ImmersionResult perf_immersion(const SpecSpace& space, const ThickLattice& lat, bool require_surjective);
ImmersionResult perf_immersion(const SchemeModel& m, std::size_t cap = enumeration_cap());

/// x -> S^sg(x) for x in HS(X), into the spectrum of dsg_model(m).
ImmersionResult sg_immersion(const SchemeModel& m, std::size_t cap = enumeration_cap());

enum class Verdict { yes, no, unknown, not_applicable };
std::string to_string(Verdict v);

struct LocusPredicates {
  /// S^b(x) is prime exactly when the local ring is a complete intersection.
  bool sb_prime = false;
  /// S^sg(x) for a singular point of a separated Gorenstein model.
  Verdict sg_prime = Verdict::not_applicable;
};

/// Table lookups of the known primality results; the lattice of D^b is not
/// computed. Throws InputError for an unknown point.
LocusPredicates locus_prime_predicates(const SchemeModel& m, std::size_t x);

/// Warns when CI(X) is not open in X or HS(X) is not open in Sing(X).
Report loci_openness_check(const SchemeModel& m);

}  // namespace trispec
