#include "trispec/spectrum.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "trispec/error.hpp"

namespace trispec {

std::optional<std::size_t> SpectrumSpace::point_of(std::size_t element) const {
  auto it = std::lower_bound(points.begin(), points.end(), element);
  if (it == points.end() || *it != element) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

SpecSpace SpectrumSpace::as_space(std::string name) const {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t p = 0; p < size(); ++p)
    for_each_bit(below[p], [&](std::size_t q) {
      if (q != p) rel.emplace_back(q, p);
    });
  // Element ids may contain characters that point names reject.
  std::vector<std::string> names;
  for (std::size_t p = 0; p < size(); ++p) names.push_back("P" + std::to_string(p));
  return SpecSpace::from_indices(std::move(name), std::move(names), rel);
}

std::string SpectrumSpace::format_set(Mask s) const {
  std::string out = "[";
  bool first = true;
  for_each_bit(s, [&](std::size_t i) {
    if (!first) out += ", ";
    first = false;
    out += point_ids[i];
  });
  return out + "]";
}

std::vector<std::size_t> primes(const ThickLattice& lat) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < lat.size(); ++a)
    if (lat.upper_covers(a).size() == 1) out.push_back(a);
  return out;
}

SpectrumSpace spectrum_over(const ThickLattice& lat, std::vector<std::size_t> points) {
  std::sort(points.begin(), points.end());
  if (points.size() > 64)
    throw CapExceeded("spectrum has " + std::to_string(points.size()) + " points; at most 64 are supported");
  SpectrumSpace spec;
  spec.points = std::move(points);
  const std::size_t n = spec.points.size();
  for (std::size_t p : spec.points) {
    spec.point_ids.push_back(lat.id(p));
    const auto& covers = lat.upper_covers(p);
    spec.witness.push_back(covers.size() == 1 ? std::optional<std::size_t>(covers.front()) : std::nullopt);
    spec.witness_ids.push_back(covers.size() == 1 ? lat.id(covers.front()) : std::string());
  }
  spec.below.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lat.leq(spec.points[j], spec.points[i])) spec.below[i] |= bit(j);

  std::vector<Mask> supports;
  lat.objects().for_each([&](std::size_t a) {
    Mask s = supp(lat, spec, a);
    spec.basis.emplace_back(a, s);
    supports.push_back(s);
  });
  spec.closed_sets = intersection_closure(supports, spec.all());
  return spec;
}

SpectrumSpace spectrum(const ThickLattice& lat) { return spectrum_over(lat, primes(lat)); }

Mask supp(const ThickLattice& lat, const SpectrumSpace& spec, std::size_t a) {
  if (a >= lat.size()) throw InputError("unknown element index");
  Mask out = 0;
  for (std::size_t i = 0; i < spec.size(); ++i)
    if (!lat.leq(a, spec.points[i])) out |= bit(i);
  return out;
}

Mask point_closure(const SpectrumSpace& spec, std::size_t point) {
  if (point >= spec.size()) throw InputError("unknown spectrum point");
  Mask topological = spec.all();
  for (Mask c : spec.closed_sets)
    if ((c >> point) & 1) topological &= c;
  if (topological != spec.below[point])
    throw std::logic_error("closure of " + spec.point_ids[point] + " is " + spec.format_set(topological) +
                           " but the primes below it are " + spec.format_set(spec.below[point]));
  return topological;
}

Report verify_point_closures(const SpectrumSpace& spec) {
  Report r;
  r.name = "point-closure";
  std::unordered_set<Mask> seen;
  for (std::size_t p = 0; p < spec.size(); ++p) {
    try {
      seen.insert(point_closure(spec, p));
    } catch (const std::logic_error& e) {
      r.fail(e.what());
    }
  }
  if (r.passed()) r.check(seen.size() == spec.size(), "distinct points share a closure (not T0)");
  r.note("points", spec.size());
  return r;
}

std::size_t radical(const ThickLattice& lat, const std::vector<std::size_t>& prime_elements, std::size_t a) {
  if (a >= lat.size()) throw InputError("unknown element index");
  std::size_t acc = lat.top();
  for (std::size_t p : prime_elements)
    if (lat.leq(a, p)) acc = lat.meet(acc, p);
  return acc;
}

std::size_t radical(const ThickLattice& lat, std::size_t a) { return radical(lat, primes(lat), a); }

std::vector<Mask> param_set(const ThickLattice& lat, const SpectrumSpace& spec) {
  std::vector<Mask> out;
  out.reserve(lat.size());
  for (std::size_t a = 0; a < lat.size(); ++a) out.push_back(supp(lat, spec, a));
  canonicalize(out);
  return out;
}

Report verify_radicals(const ThickLattice& lat) {
  Report r;
  r.name = "radical";
  auto ps = primes(lat);
  std::size_t fixed = 0;
  for (std::size_t a = 0; a < lat.size(); ++a) {
    std::size_t rad = radical(lat, ps, a);
    if (rad == a) {
      ++fixed;
    } else {
      r.fail("radical of '" + lat.id(a) + "' is '" + lat.id(rad) + "'");
    }
    if (!lat.leq(a, rad)) r.fail("radical of '" + lat.id(a) + "' is not above it");
    if (radical(lat, ps, rad) != rad) r.fail("radical of '" + lat.id(a) + "' is not idempotent");
  }
  r.note("elements", lat.size());
  r.note("radical", fixed);
  return r;
}

Report verify_cls(const ThickLattice& lat) {
  Report r;
  r.name = "cls";
  SpectrumSpace spec = spectrum(lat);
  auto ps = spec.points;

  std::vector<std::size_t> rad;
  for (std::size_t a = 0; a < lat.size(); ++a)
    if (radical(lat, ps, a) == a) rad.push_back(a);
  std::vector<Mask> param = param_set(lat, spec);

  std::vector<Mask> support(lat.size());
  for (std::size_t a = 0; a < lat.size(); ++a) support[a] = supp(lat, spec, a);
  // Largest element whose support lies in W. Supports of joins are unions,
  // so the join of all such elements qualifies.
  auto inverse = [&](Mask w) {
    std::size_t acc = lat.bottom();
    for (std::size_t a = 0; a < lat.size(); ++a)
      if (is_subset(support[a], w)) acc = lat.join(acc, a);
    if (!is_subset(support[acc], w)) r.fail("no largest element with support inside " + spec.format_set(w));
    return acc;
  };

  std::unordered_set<Mask> param_set_lookup(param.begin(), param.end());
  for (std::size_t a : rad) {
    if (!param_set_lookup.count(support[a])) r.fail("support of '" + lat.id(a) + "' is not a parameter");
    std::size_t back = inverse(support[a]);
    if (back != a) r.fail("supp^-1(supp('" + lat.id(a) + "')) = '" + lat.id(back) + "'");
  }
  for (Mask w : param) {
    std::size_t a = inverse(w);
    if (radical(lat, ps, a) != a) r.fail("supp^-1(" + spec.format_set(w) + ") is not radical");
    if (support[a] != w) r.fail("supp(supp^-1(" + spec.format_set(w) + ")) differs");
  }
  for (std::size_t a : rad)
    for (std::size_t b : rad)
      if (lat.leq(a, b) != is_subset(support[a], support[b]))
        r.fail("supp does not reflect the order between '" + lat.id(a) + "' and '" + lat.id(b) + "'");
  r.check(rad.size() == param.size(), "radical elements and parameters differ in number");
  r.note("radical", rad.size());
  r.note("param", param.size());
  return r;
}

RcstResult rcst_map(const SpecSpace& space, std::size_t cap) {
  RcstResult out{{}, from_support_data(space, cap), {}, {}};
  Report& r = out.report;
  r.name = "rcst";
  const ThickLattice& lat = out.lattice;
  out.spectrum = spectrum(lat);
  const SpectrumSpace& spec = out.spectrum;

  const auto w = prime_spcl(space);
  Mask hit = 0;
  for (std::size_t x = 0; x < space.size(); ++x) {
    auto e = lat.element_of_mask(w[x]);
    if (!e) {
      r.fail("W_" + space.points()[x] + " is not an element");
      return out;
    }
    auto p = spec.point_of(*e);
    if (!p) {
      r.fail("phi(" + space.points()[x] + ") = '" + lat.id(*e) + "' is not prime");
      return out;
    }
    if ((hit >> *p) & 1) r.fail("phi is not injective at " + space.points()[x]);
    hit |= bit(*p);
    out.phi.push_back(*p);
  }
  r.check(space.size() == spec.size() && hit == spec.all(), "phi is not onto the primes");

  auto preimage = [&](Mask z) {
    Mask m = 0;
    for (std::size_t x = 0; x < space.size(); ++x)
      if ((z >> out.phi[x]) & 1) m |= bit(x);
    return m;
  };
  // phi^{-1}(supp(a)) = sigma(a) for every element.
  for (std::size_t a = 0; a < lat.size(); ++a)
    if (preimage(supp(lat, spec, a)) != lat.mask(a))
      r.fail("phi^-1(supp('" + lat.id(a) + "')) differs from its point set");

  FiniteTopology x_top = topology_of(space, cap);
  for (Mask c : x_top.closed) {
    Mask image = 0;
    for_each_bit(c, [&](std::size_t x) { image |= bit(out.phi[x]); });
    if (!std::binary_search(spec.closed_sets.begin(), spec.closed_sets.end(), image, canonical_less))
      r.fail("image of closed set " + space.format_set(c) + " is not closed");
  }
  for (Mask z : spec.closed_sets)
    if (!space.is_down_set(preimage(z))) r.fail("preimage of closed set " + spec.format_set(z) + " is not closed");
  r.check(x_top.closed.size() == spec.closed_sets.size(), "closed-set counts differ");
  r.note("points", space.size());
  r.note("primes", spec.size());
  r.note("closed_sets", spec.closed_sets.size());
  return out;
}

QuotientImmersion induced_immersion(const ThickLattice& lat, std::size_t k) {
  auto [q, qmap] = quotient(lat, k);
  QuotientImmersion out{{}, std::move(q), {}, spectrum(lat), {}, 0};
  Report& r = out.report;
  r.name = "quot";
  out.quotient_spectrum = spectrum(out.quotient_lattice);
  const SpectrumSpace& qs = out.quotient_spectrum;
  const SpectrumSpace& as = out.ambient_spectrum;

  for (std::size_t i = 0; i < qs.size(); ++i) {
    std::size_t element = qmap.forward[qs.points[i]];
    auto p = as.point_of(element);
    if (!p) {
      r.fail("preimage of quotient prime '" + qs.point_ids[i] + "' is not prime");
      return out;
    }
    out.map.push_back(*p);
    out.image |= bit(*p);
  }
  Mask expected = 0;
  for (std::size_t i = 0; i < as.size(); ++i)
    if (lat.leq(k, as.points[i])) expected |= bit(i);
  r.check(out.image == expected, "image " + as.format_set(out.image) + " differs from the primes above '" +
                                     lat.id(k) + "' " + as.format_set(expected));

  Report imm = check_immersion(qs.topology(), as.topology(), out.map);
  r.absorb(imm);
  r.facts = imm.facts;
  r.note("quotient_primes", qs.size());
  return out;
}

}  // namespace trispec
