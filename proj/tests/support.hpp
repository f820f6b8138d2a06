#pragma once

#include <string>
#include <vector>

#include "trispec/spectrum.hpp"
#include "trispec/thick_lattice.hpp"

namespace trispec::test {

inline std::vector<std::string> ids_of(const ThickLattice& lat, const std::vector<std::size_t>& elems) {
  std::vector<std::string> out;
  for (auto e : elems) out.push_back(lat.id(e));
  return out;
}

/// Point ids of a spectrum subset, in point order.
inline std::vector<std::string> ids_of(const SpectrumSpace& spec, Mask s) {
  std::vector<std::string> out;
  for_each_bit(s, [&](std::size_t p) { out.push_back(spec.point_ids[p]); });
  return out;
}

inline std::string data_path(const std::string& name) { return std::string(TRISPEC_DATA_DIR) + "/catalog/" + name; }
inline std::string fixture_path(const std::string& name) { return std::string(TRISPEC_TEST_DATA_DIR) + "/" + name; }

}  // namespace trispec::test
