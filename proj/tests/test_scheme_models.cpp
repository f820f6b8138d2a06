#include <doctest.h>

#include "support.hpp"
#include "trispec/catalog.hpp"
#include "trispec/error.hpp"
#include "trispec/io.hpp"
#include "trispec/oracle.hpp"
#include "trispec/scheme_models.hpp"

using namespace trispec;

namespace {

SchemeModel tagged(SpecSpace space, const std::vector<std::string>& tags, bool separated = true) {
  SchemeModel m;
  m.space = std::move(space);
  for (const auto& t : tags) m.tags.push_back(parse_local_type(t));
  m.separated = separated;
  m.validate();
  return m;
}

SchemeModel v_with(const char* a, const char* b, const char* eta) {
  return tagged(catalog::v_model(), {a, b, eta});
}

std::string fmt(const SchemeModel& m, Mask s) { return m.space.format_set(s); }

}  // namespace

TEST_SUITE("scheme_models") {

TEST_CASE("local type tags") {
  CHECK(to_string(parse_local_type("ci:3")) == "ci:3");
  CHECK(parse_local_type("gorenstein").kind == LocalKind::gorenstein_non_ci);
  CHECK(parse_local_type("hypersurface").is_ci());
  CHECK_FALSE(parse_local_type("gorenstein").is_ci());
  CHECK(parse_local_type("gorenstein").is_gorenstein());
  CHECK_FALSE(parse_local_type("other").is_gorenstein());
  CHECK_THROWS_AS(parse_local_type("ci:1"), InputError);
  CHECK_THROWS_AS(parse_local_type("ci:x"), InputError);
  CHECK_THROWS_AS(parse_local_type("smooth"), InputError);
}

TEST_CASE("validate needs one tag per point") {
  SchemeModel m;
  m.space = catalog::v_model();
  m.tags = {parse_local_type("regular")};
  CHECK_THROWS_AS(m.validate(), InputError);
}

TEST_CASE("loci examples") {
  auto smooth = v_with("regular", "regular", "regular");
  CHECK(sing_locus(smooth) == 0);
  CHECK(ci_locus(smooth) == smooth.space.all());
  CHECK(hs_locus(smooth) == 0);

  auto node = v_with("hypersurface", "regular", "regular");
  CHECK(fmt(node, sing_locus(node)) == "{a}");
  CHECK(fmt(node, hs_locus(node)) == "{a}");
  CHECK(ci_locus(node) == node.space.all());

  auto mixed = v_with("ci:2", "other", "regular");
  CHECK(fmt(mixed, ci_locus(mixed)) == "{a,η}");
  CHECK(hs_locus(mixed) == 0);
  CHECK(fmt(mixed, sing_locus(mixed)) == "{a,b}");
  CHECK_FALSE(mixed.gorenstein());
}

TEST_CASE("loci inclusions on the model catalog") {
  auto models = models_from_catalog(read_document(test::data_path("models.json")));
  CHECK(models.size() >= 10);
  for (const auto& m : models) {
    Mask sing = sing_locus(m), ci = ci_locus(m), hs = hs_locus(m);
    CHECK(is_subset(hs, ci & sing));
    CHECK(is_subset(m.space.all() & ~sing, ci));
  }
}

TEST_CASE("dperf_model") {
  auto one = tagged(discrete_space(1), {"regular"});
  auto tl = dperf_model(one);
  CHECK(primes(tl.base()) == std::vector<std::size_t>{tl.base().bottom()});

  auto v = v_with("regular", "regular", "regular");
  auto vl = dperf_model(v);
  auto p = primes(vl.base());
  CHECK(p.size() == 3);
  for (Mask w : prime_spcl(v.space))
    CHECK(std::find(p.begin(), p.end(), *vl.base().element_of_mask(w)) != p.end());
  CHECK(oracle::homeomorphic(spectrum(vl.base()).topology(), topology_of(v.space)).has_value());
}

TEST_CASE("dsg_model") {
  auto smooth = v_with("regular", "regular", "regular");
  auto z = dsg_model(smooth);
  CHECK(z.size() == 1);
  CHECK(spectrum(z).size() == 0);

  auto nodes = v_with("hypersurface", "hypersurface", "regular");
  auto b = dsg_model(nodes);
  CHECK(b.size() == 4);
  CHECK(b.space()->name() == "V.sing");
  auto sb = spectrum(b);
  CHECK(sb.size() == 2);
  CHECK(oracle::homeomorphic(sb.topology(), topology_of(discrete_space(2))).has_value());

  CHECK_THROWS_WITH_AS(dsg_model(v_with("ci:2", "regular", "regular")),
                       doctest::Contains("classification unavailable"), ClassificationUnavailable);
  CHECK_THROWS_AS(dsg_model(v_with("other", "regular", "regular")), ClassificationUnavailable);
  CHECK_THROWS_AS(dsg_model(v_with("gorenstein", "regular", "regular")), ClassificationUnavailable);
  CHECK_THROWS_AS(dsg_model(tagged(catalog::v_model(), {"hypersurface", "regular", "regular"}, false)),
                  ClassificationUnavailable);
}

TEST_CASE("perf_immersion examples") {
  auto s = perf_immersion(tagged(catalog::sierpinski(), {"regular", "regular"}));
  CHECK(s.report.passed());
  CHECK(s.homeomorphism);
  CHECK(s.target_points == 2);
  auto c = perf_immersion(tagged(chain_space(3), {"regular", "hypersurface", "other"}));
  CHECK(c.homeomorphism);
}

TEST_CASE("perf_immersion into an augmented lattice is proper") {
  for (const auto& c : catalog::augmented_family()) {
    SpecSpace base = star_space(c.closed_points);
    auto r = perf_immersion(base, c.lattice, false);
    CHECK(r.report.passed());
    CHECK_FALSE(r.homeomorphism);
    CHECK(r.source_points == base.size());
    CHECK(r.target_points == base.size() + c.atoms);
    CHECK_FALSE(perf_immersion(base, c.lattice, true).report.passed());
  }
}

TEST_CASE("sg_immersion examples") {
  auto two = sg_immersion(v_with("hypersurface", "hypersurface", "regular"));
  CHECK(two.report.passed());
  CHECK(two.homeomorphism);
  CHECK(two.target_points == 2);

  auto smooth = sg_immersion(v_with("regular", "regular", "regular"));
  CHECK(smooth.report.passed());
  CHECK(smooth.map.empty());
  CHECK(smooth.target_points == 0);

  auto point = tagged(discrete_space(1), {"hypersurface"});
  auto single = sg_immersion(point);
  CHECK(single.homeomorphism);
  auto lat = dsg_model(point);
  CHECK(spectrum(lat).points == std::vector<std::size_t>{lat.bottom()});

  CHECK_THROWS_AS(sg_immersion(v_with("ci:2", "hypersurface", "regular")), ClassificationUnavailable);
}

TEST_CASE("immersions on the model catalog") {
  auto models = models_from_catalog(read_document(test::data_path("models.json")));
  for (const auto& m : models) {
    CAPTURE(m.space.name());
    auto perf = perf_immersion(m);
    CHECK(perf.report.passed());
    CHECK(perf.homeomorphism);
    bool classified = m.separated && m.gorenstein() && hs_locus(m) == sing_locus(m);
    if (classified) {
      auto sg = sg_immersion(m);
      CHECK(sg.report.passed());
      CHECK(sg.homeomorphism);
    } else {
      CHECK_THROWS_AS(sg_immersion(m), ClassificationUnavailable);
    }
  }
}

TEST_CASE("locus_prime_predicates") {
  auto m = tagged(discrete_space(4), {"regular", "hypersurface", "other", "gorenstein"});
  CHECK(locus_prime_predicates(m, 0).sb_prime);
  CHECK(locus_prime_predicates(m, 0).sg_prime == Verdict::not_applicable);
  CHECK(locus_prime_predicates(m, 1).sb_prime);
  CHECK_FALSE(locus_prime_predicates(m, 2).sb_prime);
  // The model is not Gorenstein because of the "other" point.
  CHECK(locus_prime_predicates(m, 1).sg_prime == Verdict::not_applicable);

  auto g = tagged(discrete_space(3), {"hypersurface", "ci:2", "gorenstein"});
  CHECK(locus_prime_predicates(g, 0).sg_prime == Verdict::yes);
  CHECK(locus_prime_predicates(g, 1).sb_prime);
  CHECK(locus_prime_predicates(g, 1).sg_prime == Verdict::no);
  CHECK_FALSE(locus_prime_predicates(g, 2).sb_prime);
  CHECK(locus_prime_predicates(g, 2).sg_prime == Verdict::unknown);
  CHECK(to_string(Verdict::not_applicable) == "n/a");
  CHECK_THROWS_AS(locus_prime_predicates(g, 3), InputError);
}

TEST_CASE("loci_openness_check") {
  auto smooth = loci_openness_check(v_with("regular", "regular", "regular"));
  CHECK(smooth.status() == "PASS");
  auto closed_ci = loci_openness_check(v_with("regular", "regular", "other"));
  CHECK(closed_ci.status() == "WARN");
  CHECK(closed_ci.passed());
  auto node = loci_openness_check(v_with("hypersurface", "regular", "regular"));
  CHECK(node.status() == "PASS");
  // HS = {a} inside Sing = {a, η}: {a} is not open there.
  auto hs = loci_openness_check(v_with("hypersurface", "regular", "ci:2"));
  CHECK(hs.status() == "WARN");
}

}  // TEST_SUITE
