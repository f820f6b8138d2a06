#include <doctest.h>

#include "support.hpp"
#include "trispec/catalog.hpp"
#include "trispec/error.hpp"
#include "trispec/oracle.hpp"
#include "trispec/tensor.hpp"

using namespace trispec;
using trispec::test::ids_of;
using Ids = std::vector<std::string>;

TEST_SUITE("tensor") {

TEST_CASE("tensor_lattice examples") {
  auto s = tensor_lattice(catalog::sierpinski());
  CHECK(s.size() == 3);
  std::size_t a = s.base().index_of("{a}");
  CHECK(s.mul(a, a) == a);

  auto v = tensor_lattice(catalog::v_model());
  CHECK(v.mul(v.base().index_of("{a}"), v.base().index_of("{b}")) == v.base().bottom());
  for (std::size_t e = 0; e < v.size(); ++e) {
    CHECK(v.mul(v.unit(), e) == e);
    CHECK(v.power(e, 3) == e);
    CHECK(v.is_ideal(e));
  }
}

TEST_CASE("multiplication is commutative, associative and idempotent") {
  auto tl = tensor_lattice(grid_space(2, 3));
  for (std::size_t a = 0; a < tl.size(); ++a)
    for (std::size_t b = 0; b < tl.size(); ++b) {
      CHECK(tl.mul(a, b) == tl.mul(b, a));
      CHECK(tl.mul(a, a) == a);
      for (std::size_t c = 0; c < tl.size(); c += 3) CHECK(tl.mul(tl.mul(a, b), c) == tl.mul(a, tl.mul(b, c)));
    }
}

TEST_CASE("the tensor layer needs a classified lattice") {
  CHECK_THROWS_AS(TensorLattice(catalog::pentagon()), InputError);
  CHECK_THROWS_AS(TensorLattice(augment(from_support_data(catalog::v_model()), {"f"})), InputError);
}

TEST_CASE("prime_ideals examples") {
  auto v = tensor_lattice(catalog::v_model());
  CHECK(ids_of(v.base(), prime_ideals(v)) == Ids{"{a}", "{b}", "{a,b}"});
  auto s = tensor_lattice(catalog::sierpinski());
  CHECK(ids_of(s.base(), prime_ideals(s)) == Ids{"∅", "{a}"});
  auto d = tensor_lattice(SpecSpace::from_relations("d", {"a", "b"}, {}));
  CHECK(ids_of(d.base(), prime_ideals(d)) == Ids{"{a}", "{b}"});
}

TEST_CASE("prime ideals are the complements of up-sets of points") {
  for (const auto& space : catalog::spaces()) {
    if (space.size() > 10) continue;
    auto tl = tensor_lattice(space);
    std::vector<std::size_t> expected;
    for (Mask w : prime_spcl(space)) expected.push_back(*tl.base().element_of_mask(w));
    std::sort(expected.begin(), expected.end());
    CHECK(prime_ideals(tl) == expected);
    CHECK(verify_balmer_points(tl).passed());
  }
}

TEST_CASE("tensor_radical examples") {
  auto v = tensor_lattice(catalog::v_model());
  CHECK(tensor_radical(v, v.unit()) == v.unit());
  CHECK(tensor_radical(v, v.base().bottom()) == v.base().bottom());
  auto pis = prime_ideals(v);
  CHECK(prime_ideal_meet(v, pis, v.base().bottom()) == v.base().bottom());
  for (std::size_t a = 0; a < v.size(); ++a) {
    CHECK(tensor_radical(v, a) == a);
    CHECK(prime_ideal_meet(v, pis, a) == a);
  }
  CHECK(prime_ideal_meet(v, pis, v.unit()) == v.unit());
}

TEST_CASE("balmer_spectrum examples") {
  auto v = balmer_spectrum(tensor_lattice(catalog::v_model()));
  CHECK(oracle::homeomorphic(v.topology(), topology_of(catalog::v_model())).has_value());
  auto rc = rcst_map(catalog::v_model());
  CHECK(oracle::homeomorphic(v.topology(), rc.spectrum.topology()).has_value());
  for (std::size_t n = 1; n <= 4; ++n) {
    auto d = balmer_spectrum(tensor_lattice(discrete_space(n)));
    CHECK(d.closed_sets.size() == (std::size_t{1} << n));
  }
  auto s = balmer_spectrum(tensor_lattice(catalog::sierpinski()));
  CHECK(oracle::homeomorphic(s.topology(), topology_of(catalog::sierpinski())).has_value());
}

TEST_CASE("balmer_spectrum is homeomorphic to the space") {
  for (const auto& space : catalog::spaces()) {
    if (space.size() > 10) continue;
    auto b = balmer_spectrum(tensor_lattice(space));
    CHECK(oracle::homeomorphic(b.topology(), topology_of(space)).has_value());
  }
}

TEST_CASE("verification reports on examples") {
  auto v = tensor_lattice(catalog::v_model());
  auto bal = verify_bal(v);
  CHECK(bal.passed());
  CHECK(bal.facts == std::vector<std::pair<std::string, std::string>>{{"radical_ideals", "5"}, {"thomason", "5"}});
  CHECK(verify_bal(tensor_lattice(discrete_space(1))).passed());
  CHECK(verify_prid(v).passed());
  CHECK(verify_prid(tensor_lattice(catalog::sierpinski())).passed());
  CHECK(verify_prid(tensor_lattice(discrete_space(3))).passed());
  auto tw = verify_pp_twoprm(v);
  CHECK(tw.passed());
  CHECK(verify_int(v).passed());
  CHECK(verify_cl(v).passed());
}

TEST_CASE("twoprm on the one-element lattice") {
  // A space with one point has a two-element lattice; the one-element lattice
  // comes from restricting to no points.
  auto empty = discrete_space(1).restrict_to(0, "empty");
  auto tl = tensor_lattice(empty);
  CHECK(tl.size() == 1);
  CHECK(prime_ideals(tl).empty());
  CHECK(primes(tl.base()).empty());
  CHECK(verify_pp_twoprm(tl).passed());
}

TEST_CASE("discrete 3: the bottom is neither prime nor a prime ideal") {
  auto tl = tensor_lattice(discrete_space(3));
  auto p = primes(tl.base());
  auto pi = prime_ideals(tl);
  CHECK(std::find(p.begin(), p.end(), tl.base().bottom()) == p.end());
  CHECK(std::find(pi.begin(), pi.end(), tl.base().bottom()) == pi.end());
  CHECK(tl.base().upper_covers(tl.base().bottom()).size() == 3);
}

}  // TEST_SUITE
