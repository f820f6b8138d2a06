#include "trispec/catalog.hpp"

namespace trispec::catalog {

SpecSpace sierpinski() { return SpecSpace::from_relations("sierpinski", {"a", "b"}, {{"a", "b"}}); }

SpecSpace v_model() {
  return SpecSpace::from_relations("V", {"a", "b", "η"}, {{"a", "η"}, {"b", "η"}});
}

std::vector<SpecSpace> spaces() {
  std::vector<SpecSpace> out{sierpinski(), v_model(), discrete_space(1), discrete_space(2), discrete_space(4),
                             chain_space(3), chain_space(12), star_space(4), grid_space(3, 4), grid_space(2, 6)};
  // Two curves meeting at q.
  out.push_back(SpecSpace::from_relations("two-lines", {"p", "q", "r", "g1", "g2"},
                                          {{"p", "g1"}, {"q", "g1"}, {"q", "g2"}, {"r", "g2"}}));
  // Height two: closed points, two curves, one generic point.
  out.push_back(SpecSpace::from_relations(
      "plane", {"m1", "m2", "m3", "c1", "c2", "g"},
      {{"m1", "c1"}, {"m2", "c1"}, {"m2", "c2"}, {"m3", "c2"}, {"c1", "g"}, {"c2", "g"}}));
  out.push_back(discrete_space(12));
  return out;
}

ThickLattice pentagon() {
  return from_explicit({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}},
                       {"0", "a", "b", "c", "1"}, "0", "1");
}

ThickLattice diamond() {
  return from_explicit({"0", "x", "y", "z", "1"},
                       {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}},
                       {"0", "x", "y", "z", "1"}, "0", "1");
}

ThickLattice boolean_lattice(std::size_t atoms) {
  std::vector<std::string> ids;
  auto name = [&](std::size_t m) {
    if (m == 0) return std::string("0");
    std::string s;
    for (std::size_t i = 0; i < atoms; ++i)
      if ((m >> i) & 1) s += static_cast<char>('a' + i);
    return s;
  };
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t m = 0; m < (std::size_t{1} << atoms); ++m) {
    ids.push_back(name(m));
    for (std::size_t i = 0; i < atoms; ++i)
      if (!((m >> i) & 1)) covers.emplace_back(name(m), name(m | (std::size_t{1} << i)));
  }
  return from_explicit(ids, covers, ids);
}

ThickLattice chain_lattice(std::size_t n) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back("e" + std::to_string(i));
    if (i > 0) covers.emplace_back(ids[i - 1], ids[i]);
  }
  return from_explicit(ids, covers, ids);
}

std::vector<ThickLattice> explicit_lattices() {
  return {chain_lattice(1), chain_lattice(3), chain_lattice(5), pentagon(), diamond(),
          boolean_lattice(2), boolean_lattice(3)};
}

std::vector<std::string> atom_labels(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= m; ++i) out.push_back("f" + std::to_string(i));
  return out;
}

std::vector<AugmentedCase> augmented_family() {
  std::vector<AugmentedCase> out;
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t m = 1; m <= 3; ++m)
      out.push_back({n, m, augment(from_support_data(star_space(n)), atom_labels(m))});
  return out;
}

}  // namespace trispec::catalog
