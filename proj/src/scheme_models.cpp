#include "trispec/scheme_models.hpp"

#include "trispec/error.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/topology.hpp"

namespace trispec {

std::string to_string(const LocalType& t) {
  switch (t.kind) {
    case LocalKind::regular: return "regular";
    case LocalKind::hypersurface: return "hypersurface";
    case LocalKind::complete_intersection: return "ci:" + std::to_string(t.codim);
    case LocalKind::gorenstein_non_ci: return "gorenstein";
    case LocalKind::other: return "other";
  }
  return "other";
}

LocalType parse_local_type(const std::string& tag) {
  if (tag == "regular") return {LocalKind::regular, 0};
  if (tag == "hypersurface") return {LocalKind::hypersurface, 1};
  if (tag == "gorenstein") return {LocalKind::gorenstein_non_ci, 0};
  if (tag == "other") return {LocalKind::other, 0};
  if (tag.rfind("ci:", 0) == 0) {
    const std::string digits = tag.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad codimension in tag '" + tag + "'");
    int c = std::stoi(digits);
    if (c < 2) throw InputError("ci tags need codimension >= 2, got '" + tag + "'");
    return {LocalKind::complete_intersection, c};
  }
  throw InputError("unknown local type '" + tag + "'");
}

void SchemeModel::validate() const {
  if (tags.size() != space.size())
    throw InputError("model has " + std::to_string(tags.size()) + " tags for " + std::to_string(space.size()) +
                     " points");
}

bool SchemeModel::gorenstein() const {
  for (const auto& t : tags)
    if (!t.is_gorenstein()) return false;
  return true;
}

Mask sing_locus(const SchemeModel& m) {
  Mask out = 0;
  for (std::size_t x = 0; x < m.tags.size(); ++x)
    if (m.tags[x].kind != LocalKind::regular) out |= bit(x);
  return out;
}

Mask ci_locus(const SchemeModel& m) {
  Mask out = 0;
  for (std::size_t x = 0; x < m.tags.size(); ++x)
    if (m.tags[x].is_ci()) out |= bit(x);
  return out;
}

Mask hs_locus(const SchemeModel& m) {
  Mask out = 0;
  for (std::size_t x = 0; x < m.tags.size(); ++x)
    if (m.tags[x].kind == LocalKind::hypersurface) out |= bit(x);
  return out & sing_locus(m);
}

TensorLattice dperf_model(const SchemeModel& m, std::size_t cap) {
  m.validate();
  return tensor_lattice(m.space, cap);
}

namespace {

void require_sg_classification(const SchemeModel& m) {
  m.validate();
  if (!m.separated) throw ClassificationUnavailable("classification unavailable: model is not separated");
  if (!m.gorenstein()) throw ClassificationUnavailable("classification unavailable: model is not Gorenstein");
  if (hs_locus(m) != sing_locus(m))
    throw ClassificationUnavailable("classification unavailable: a singular point is not a hypersurface");
}

}  // namespace

ThickLattice dsg_model(const SchemeModel& m, std::size_t cap) {
  require_sg_classification(m);
  return from_support_data(m.space.restrict_to(sing_locus(m), m.space.name() + ".sing"), cap);
}

ImmersionResult perf_immersion(const SpecSpace& space, const ThickLattice& lat, bool require_surjective) {
  ImmersionResult out;
  out.report.name = "perf-immersion";
  SpectrumSpace spec = spectrum(lat);
  out.source_points = space.size();
  out.target_points = spec.size();
  for (Mask w : prime_spcl(space)) {
    const std::string id = space.format_set(w);
    if (!lat.contains(id)) {
      out.report.fail("S^perf has no element '" + id + "'");
      return out;
    }
    auto p = spec.point_of(lat.index_of(id));
    if (!p) {
      out.report.fail("S^perf element '" + id + "' is not prime");
      return out;
    }
    out.map.push_back(*p);
  }
  Report imm = check_immersion(topology_of(space, 64), spec.topology(), out.map, require_surjective);
  out.report.absorb(imm);
  out.report.facts = imm.facts;
  out.homeomorphism = imm.passed() && out.source_points == out.target_points;
  return out;
}

ImmersionResult perf_immersion(const SchemeModel& m, std::size_t cap) {
  TensorLattice tl = dperf_model(m, cap);
  return perf_immersion(m.space, tl.base(), true);
}

ImmersionResult sg_immersion(const SchemeModel& m, std::size_t cap) {
  ThickLattice lat = dsg_model(m, cap);
  const SpecSpace& sing = *lat.space();
  ImmersionResult out;
  out.report.name = "sg-immersion";
  SpectrumSpace spec = spectrum(lat);
  const Mask hs = hs_locus(m), sg = sing_locus(m);
  const Mask hs_in_sing = compress(hs, sg);
  out.source_points = static_cast<std::size_t>(popcount(hs));
  out.target_points = spec.size();

  const auto w = prime_spcl(sing);
  for_each_bit(hs_in_sing, [&](std::size_t x) {
    auto e = lat.element_of_mask(w[x]);
    auto p = e ? spec.point_of(*e) : std::nullopt;
    if (!p) {
      out.report.fail("S^sg(" + sing.points()[x] + ") is not prime");
      return;
    }
    out.map.push_back(*p);
  });
  if (!out.report.passed()) return out;

  FiniteTopology source = topology_of(m.space, 64).subspace(hs);
  Report imm = check_immersion(source, spec.topology(), out.map, hs == sg);
  out.report.absorb(imm);
  out.report.facts = imm.facts;
  out.homeomorphism = imm.passed() && out.source_points == out.target_points;
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
    case Verdict::not_applicable: return "n/a";
  }
  return "n/a";
}

LocusPredicates locus_prime_predicates(const SchemeModel& m, std::size_t x) {
  m.validate();
  if (x >= m.space.size()) throw InputError("unknown point index");
  const LocalType& t = m.tags[x];
  LocusPredicates out;
  out.sb_prime = t.is_ci();
  const bool singular = t.kind != LocalKind::regular;
  if (!singular || !m.separated || !m.gorenstein()) {
    out.sg_prime = Verdict::not_applicable;
  } else if (t.kind == LocalKind::hypersurface) {
    out.sg_prime = Verdict::yes;
  } else if (t.kind == LocalKind::complete_intersection) {
    out.sg_prime = Verdict::no;
  } else {
    out.sg_prime = Verdict::unknown;
  }
  return out;
}

Report loci_openness_check(const SchemeModel& m) {
  m.validate();
  Report r;
  r.name = "openness";
  const SpecSpace& X = m.space;
  const Mask ci = ci_locus(m), sg = sing_locus(m), hs = hs_locus(m);
  // Open in X: the complement is a down-set.
  if (!X.is_down_set(X.all() & ~ci)) r.warn("CI locus " + X.format_set(ci) + " is not open");
  // Open in Sing: the rest of Sing is closed in the subspace topology.
  const Mask rest = sg & ~hs;
  if ((closure(X, rest) & sg) != rest) r.warn("HS locus " + X.format_set(hs) + " is not open in Sing");
  r.note("ci", X.format_set(ci));
  r.note("hs", X.format_set(hs));
  r.note("sing", X.format_set(sg));
  return r;
}

}  // namespace trispec
