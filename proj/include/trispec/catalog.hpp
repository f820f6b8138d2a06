#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trispec/poset_space.hpp"
#include "trispec/thick_lattice.hpp"

// Named structures used by the test suites, the CLI self-test and the docs.
namespace trispec::catalog {

/// a < b: a is the closed point.
SpecSpace sierpinski();
/// Two closed points a, b under a generic point η.
SpecSpace v_model();

/// Named posets up to 12 points.
std::vector<SpecSpace> spaces();

/// 0 < a < c < 1 and 0 < b < 1.
ThickLattice pentagon();
/// Three atoms between 0 and 1.
ThickLattice diamond();
ThickLattice boolean_lattice(std::size_t atoms);
ThickLattice chain_lattice(std::size_t n);
/// N5, M3, Boolean-2, Boolean-3 and small chains, objects = all elements.
std::vector<ThickLattice> explicit_lattices();

/// Labels f1..fm.
std::vector<std::string> atom_labels(std::size_t m);
/// Star spaces with n in {2,3,4} closed points, augmented by m in {1,2,3}
/// atoms, as (n, m, lattice).
struct AugmentedCase {
  std::size_t closed_points;
  std::size_t atoms;
  ThickLattice lattice;
};
std::vector<AugmentedCase> augmented_family();

}  // namespace trispec::catalog
