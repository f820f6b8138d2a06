#include <doctest.h>

#include <set>

#include "support.hpp"
#include "trispec/catalog.hpp"
#include "trispec/error.hpp"
#include "trispec/oracle.hpp"
#include "trispec/spectrum.hpp"

using namespace trispec;
using trispec::test::ids_of;
using Ids = std::vector<std::string>;

namespace {

// Labeled posets as relation filters: every reflexive relation on n points
// that is antisymmetric and transitive.
std::size_t naive_poset_count(std::size_t n) {
  std::size_t slots = n * (n - 1), count = 0;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << slots); ++r) {
    auto rel = [&](std::size_t i, std::size_t j) {
      if (i == j) return true;
      std::size_t k = i * (n - 1) + (j < i ? j : j - 1);
      return ((r >> k) & 1) != 0;
    };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && rel(i, j) && rel(j, i)) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (rel(i, j) && rel(j, k) && !rel(i, k)) ok = false;
      }
    count += ok;
  }
  return count;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("scan_primes examples") {
  auto chain = from_support_data(catalog::sierpinski());
  CHECK(ids_of(chain, oracle::scan_primes(chain)) == Ids{"∅", "{a}"});
  auto b2 = catalog::boolean_lattice(2);
  CHECK(ids_of(b2, oracle::scan_primes(b2)) == Ids{"a", "b"});
  CHECK(oracle::scan_primes(catalog::chain_lattice(1)).empty());
}

TEST_CASE("scan_primes has a size cap") {
  CHECK_NOTHROW(oracle::scan_primes(from_support_data(discrete_space(12))));
  CHECK_THROWS_AS(oracle::scan_primes(from_support_data(discrete_space(13))), CapExceeded);
}

TEST_CASE("scan_prime_subsets examples") {
  auto s = catalog::sierpinski();
  CHECK(oracle::scan_prime_subsets(s) == std::vector<Mask>{0, s.mask_of({"a"})});
  auto v = catalog::v_model();
  CHECK(oracle::scan_prime_subsets(v) == std::vector<Mask>{v.mask_of({"a"}), v.mask_of({"b"}), v.mask_of({"a", "b"})});
  CHECK(oracle::scan_prime_subsets(discrete_space(1)) == std::vector<Mask>{0});
  CHECK_THROWS_AS(oracle::scan_prime_subsets(discrete_space(21)), CapExceeded);
}

TEST_CASE("all_posets counts") {
  const std::size_t labeled[] = {1, 3, 19, 219, 4231};
  const std::size_t unlabeled[] = {1, 2, 5, 16, 63};
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(oracle::all_posets(n, false).size() == labeled[n - 1]);
    CHECK(oracle::all_posets(n, true).size() == unlabeled[n - 1]);
  }
  CHECK_THROWS_AS(oracle::all_posets(7, false), InputError);
}

TEST_CASE("all_posets matches a naive relation filter") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(oracle::all_posets(n, false).size() == naive_poset_count(n));
}

TEST_CASE("all_posets yields distinct valid orders in a fixed order") {
  auto first = oracle::all_posets(4, false);
  auto second = oracle::all_posets(4, false);
  CHECK(first == second);
  std::set<std::vector<Mask>> seen;
  for (const auto& s : first) {
    std::vector<Mask> downs;
    for (std::size_t x = 0; x < s.size(); ++x) downs.push_back(s.down(x));
    CHECK(seen.insert(downs).second);
    CHECK(s.is_t0());
  }
  std::set<std::uint64_t> codes;
  for (const auto& s : oracle::all_posets(4, true)) CHECK(codes.insert(oracle::canonical_code(s)).second);
}

TEST_CASE("canonical_code is a relabeling invariant") {
  auto v = catalog::v_model();
  auto w = SpecSpace::from_relations("w", {"η", "b", "a"}, {{"a", "η"}, {"b", "η"}});
  CHECK(oracle::canonical_code(v) == oracle::canonical_code(w));
  CHECK(oracle::canonical_code(v) != oracle::canonical_code(chain_space(3)));
}

TEST_CASE("homeomorphic") {
  auto s = topology_of(catalog::sierpinski());
  auto id = oracle::homeomorphic(s, s);
  REQUIRE(id);
  CHECK(*id == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(oracle::homeomorphic(s, topology_of(discrete_space(2))));

  auto v = topology_of(catalog::v_model());
  auto w = topology_of(SpecSpace::from_relations("w", {"η", "b", "a"}, {{"a", "η"}, {"b", "η"}}));
  auto f = oracle::homeomorphic(v, w);
  REQUIRE(f);
  CHECK((*f)[2] == 0);
  for (Mask c : v.closed) {
    Mask image = 0;
    for_each_bit(c, [&](std::size_t p) { image |= bit((*f)[p]); });
    CHECK(w.is_closed(image));
  }
  CHECK_THROWS_AS(oracle::homeomorphic(topology_of(discrete_space(13)), topology_of(discrete_space(13))),
                  CapExceeded);
}

TEST_CASE("homeomorphic separates non-isomorphic posets on 4 points") {
  auto reps = oracle::all_posets(4, true);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      CHECK(oracle::homeomorphic(topology_of(reps[i]), topology_of(reps[j])).has_value() == (i == j));
}

TEST_CASE("grid transfer DP") {
  CHECK(oracle::grid_downsets_transfer(4, 4) == 70);
  CHECK(oracle::grid_downsets_transfer(1, 5) == 6);
  CHECK(oracle::grid_downsets_transfer(4, 4) == enumerate_spcl(grid_space(4, 4)).size());
  CHECK(oracle::grid_downsets_transfer(3, 4) == enumerate_spcl(grid_space(3, 4)).size());
}

}  // TEST_SUITE
