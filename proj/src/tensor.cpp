#include "trispec/tensor.hpp"

#include <algorithm>
#include <unordered_set>

#include "trispec/error.hpp"

namespace trispec {

TensorLattice::TensorLattice(ThickLattice base) : base_(std::move(base)) {
  if (!base_.is_classified())
    throw InputError("a tensor structure needs a lattice classified by a space");
}

std::size_t TensorLattice::mul(std::size_t a, std::size_t b) const {
  auto e = base_.element_of_mask(base_.mask(a) & base_.mask(b));
  if (!e) throw std::logic_error("product of '" + base_.id(a) + "' and '" + base_.id(b) + "' is not an element");
  return *e;
}

std::size_t TensorLattice::power(std::size_t a, std::size_t n) const {
  std::size_t acc = a;
  for (std::size_t i = 1; i < n; ++i) acc = mul(acc, a);
  return acc;
}

bool TensorLattice::is_ideal(std::size_t a) const {
  bool ok = true;
  base_.down(a).for_each([&](std::size_t x) {
    if (!ok || !base_.is_object(x)) return;
    base_.objects().for_each([&](std::size_t m) {
      if (ok && !base_.leq(mul(m, x), a)) ok = false;
    });
  });
  return ok;
}

TensorLattice tensor_lattice(const SpecSpace& space, std::size_t cap) {
  return TensorLattice(from_support_data(space, cap));
}

std::vector<std::size_t> prime_ideals(const TensorLattice& tl) {
  const ThickLattice& lat = tl.base();
  const auto objs = lat.objects().indices();
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < lat.size(); ++p) {
    if (p == lat.top() || !tl.is_ideal(p)) continue;
    bool prime = true;
    for (std::size_t i = 0; prime && i < objs.size(); ++i)
      for (std::size_t j = i; prime && j < objs.size(); ++j)
        if (lat.leq(tl.mul(objs[i], objs[j]), p) && !lat.leq(objs[i], p) && !lat.leq(objs[j], p)) prime = false;
    if (prime) out.push_back(p);
  }
  return out;
}

std::size_t tensor_radical(const TensorLattice& tl, std::size_t a) {
  const ThickLattice& lat = tl.base();
  if (a >= lat.size()) throw InputError("unknown element index");
  std::size_t acc = lat.bottom();
  lat.objects().for_each([&](std::size_t m) {
    // Powers of m eventually repeat; stop at the first repeat.
    std::unordered_set<std::size_t> seen;
    for (std::size_t pw = m; seen.insert(pw).second; pw = tl.mul(pw, m)) {
      if (lat.leq(pw, a)) {
        acc = lat.join(acc, m);
        break;
      }
    }
  });
  return acc;
}

std::size_t prime_ideal_meet(const TensorLattice& tl, const std::vector<std::size_t>& prime_ideal_elements,
                             std::size_t a) {
  return radical(tl.base(), prime_ideal_elements, a);
}

SpectrumSpace balmer_spectrum(const TensorLattice& tl) { return spectrum_over(tl.base(), prime_ideals(tl)); }

namespace {

std::vector<std::size_t> radical_ideals(const TensorLattice& tl) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < tl.size(); ++a)
    if (tl.is_ideal(a) && tensor_radical(tl, a) == a) out.push_back(a);
  return out;
}

}  // namespace

Report verify_bal(const TensorLattice& tl) {
  Report r;
  r.name = "bal";
  const ThickLattice& lat = tl.base();
  SpectrumSpace bs = balmer_spectrum(tl);
  auto rad = radical_ideals(tl);
  std::vector<Mask> thom = enumerate_spcl(bs.as_space(), 64).members;
  std::unordered_set<Mask> thom_lookup(thom.begin(), thom.end());

  std::vector<Mask> support(lat.size());
  for (std::size_t a = 0; a < lat.size(); ++a) support[a] = supp(lat, bs, a);
  auto inverse = [&](Mask w) {
    std::size_t acc = lat.bottom();
    lat.objects().for_each([&](std::size_t m) {
      if (is_subset(support[m], w)) acc = lat.join(acc, m);
    });
    return acc;
  };
  for (std::size_t a : rad) {
    if (!thom_lookup.count(support[a])) r.fail("support of '" + lat.id(a) + "' is not Thomason");
    if (inverse(support[a]) != a) r.fail("Supp^-1(Supp('" + lat.id(a) + "')) differs");
  }
  for (Mask w : thom) {
    std::size_t a = inverse(w);
    if (std::find(rad.begin(), rad.end(), a) == rad.end())
      r.fail("Supp^-1(" + bs.format_set(w) + ") is not a radical ideal");
    if (support[a] != w) r.fail("Supp(Supp^-1(" + bs.format_set(w) + ")) differs");
  }
  r.check(rad.size() == thom.size(), "radical ideals and Thomason subsets differ in number");
  r.note("radical_ideals", rad.size());
  r.note("thomason", thom.size());
  return r;
}

Report verify_prid(const TensorLattice& tl) {
  Report r;
  r.name = "prid";
  const ThickLattice& lat = tl.base();
  auto rad = radical_ideals(tl);
  auto pis = prime_ideals(tl);
  for (std::size_t p : rad) {
    // Minimal radical ideals strictly above p.
    std::vector<std::size_t> above;
    for (std::size_t q : rad)
      if (q != p && lat.leq(p, q)) above.push_back(q);
    std::size_t minimal = 0;
    for (std::size_t q : above) {
      bool is_min = true;
      for (std::size_t s : above)
        if (s != q && lat.leq(s, q)) is_min = false;
      if (is_min) ++minimal;
    }
    bool unique_cover = minimal == 1;
    bool is_prime = std::binary_search(pis.begin(), pis.end(), p);
    if (unique_cover && !is_prime) r.fail("'" + lat.id(p) + "' has a unique radical cover but is not prime");
    if (is_prime && !unique_cover) r.fail("prime ideal '" + lat.id(p) + "' lacks a unique radical cover");
  }
  r.note("radical_ideals", rad.size());
  r.note("prime_ideals", pis.size());
  return r;
}

Report verify_pp_twoprm(const TensorLattice& tl) {
  Report r;
  r.name = "twoprm";
  const ThickLattice& lat = tl.base();
  auto tri = primes(lat);
  auto pis = prime_ideals(tl);
  std::vector<std::size_t> tri_ideals;
  for (std::size_t p : tri)
    if (tl.is_ideal(p) && tensor_radical(tl, p) == p) tri_ideals.push_back(p);
  for (std::size_t p : tri_ideals)
    if (!std::binary_search(pis.begin(), pis.end(), p))
      r.fail("prime thick subcategory '" + lat.id(p) + "' is not a prime ideal");
  if (lat.is_classified()) r.check(tri == pis, "prime thick subcategories differ from prime ideals");
  r.note("primes", tri.size());
  r.note("prime_ideals", pis.size());
  return r;
}

Report verify_int(const TensorLattice& tl) {
  Report r;
  r.name = "int";
  auto pis = prime_ideals(tl);
  for (std::size_t a = 0; a < tl.size(); ++a) {
    if (!tl.is_ideal(a)) continue;
    std::size_t lhs = tensor_radical(tl, a), rhs = prime_ideal_meet(tl, pis, a);
    if (lhs != rhs)
      r.fail("radical of '" + tl.base().id(a) + "' is '" + tl.base().id(lhs) + "' but the prime ideals meet in '" +
             tl.base().id(rhs) + "'");
  }
  return r;
}

Report verify_cl(const TensorLattice& tl) {
  Report r = verify_point_closures(balmer_spectrum(tl));
  r.name = "cl";
  return r;
}

Report verify_balmer_points(const TensorLattice& tl) {
  Report r;
  r.name = "balmer-points";
  const ThickLattice& lat = tl.base();
  const SpecSpace& space = *lat.space();
  std::vector<std::size_t> expected;
  for (Mask w : prime_spcl(space)) expected.push_back(*lat.element_of_mask(w));
  std::sort(expected.begin(), expected.end());
  r.check(prime_ideals(tl) == expected, "prime ideals are not the complements of point up-sets");
  return r;
}

}  // namespace trispec
