#include "trispec/topology.hpp"

#include <algorithm>
#include <unordered_set>

namespace trispec {

bool FiniteTopology::is_closed(Mask s) const {
  return std::binary_search(closed.begin(), closed.end(), s, canonical_less);
}

Mask FiniteTopology::closure(Mask s) const {
  Mask out = all();
  for (Mask c : closed)
    if (is_subset(s, c)) out &= c;
  return out;
}

std::vector<Mask> FiniteTopology::point_closures() const {
  std::vector<Mask> out(size());
  for (std::size_t p = 0; p < size(); ++p) out[p] = closure(bit(p));
  return out;
}

bool FiniteTopology::is_topology() const {
  std::unordered_set<Mask> set(closed.begin(), closed.end());
  if (!set.count(0) || !set.count(all())) return false;
  for (Mask a : closed) {
    if (!is_subset(a, all())) return false;
    for (Mask b : closed)
      if (!set.count(a | b) || !set.count(a & b)) return false;
  }
  return true;
}

bool FiniteTopology::is_t0() const {
  auto cl = point_closures();
  std::unordered_set<Mask> seen(cl.begin(), cl.end());
  return seen.size() == cl.size();
}

FiniteTopology FiniteTopology::subspace(Mask keep) const {
  FiniteTopology sub;
  for_each_bit(keep & all(), [&](std::size_t p) { sub.labels.push_back(labels[p]); });
  for (Mask c : closed) sub.closed.push_back(compress(c, keep));
  canonicalize(sub.closed);
  return sub;
}

FiniteTopology topology_of(const SpecSpace& space, std::size_t cap) {
  return {space.points(), enumerate_spcl(space, cap).members};
}

void canonicalize(std::vector<Mask>& family) {
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::vector<Mask> intersection_closure(const std::vector<Mask>& family, Mask all) {
  std::vector<Mask> basis = family;
  canonicalize(basis);
  std::unordered_set<Mask> seen{all};
  std::vector<Mask> result{all};
  for (Mask b : basis) {
    const std::size_t current = result.size();
    for (std::size_t i = 0; i < current; ++i) {
      Mask m = result[i] & b;
      if (seen.insert(m).second) result.push_back(m);
    }
  }
  canonicalize(result);
  return result;
}

Mask compress(Mask m, Mask keep) {
  Mask out = 0;
  std::size_t k = 0;
  for_each_bit(keep, [&](std::size_t p) {
    if ((m >> p) & 1) out |= bit(k);
    ++k;
  });
  return out;
}

Report check_immersion(const FiniteTopology& source, const FiniteTopology& target,
                       const std::vector<std::size_t>& map, bool require_surjective) {
  Report r;
  r.name = "immersion";
  if (map.size() != source.size()) {
    r.fail("map has " + std::to_string(map.size()) + " entries for " + std::to_string(source.size()) +
           " source points");
    return r;
  }
  Mask image = 0;
  bool injective = true;
  for (std::size_t p = 0; p < map.size(); ++p) {
    if (map[p] >= target.size()) {
      r.fail("point '" + source.labels[p] + "' maps outside the target");
      return r;
    }
    if ((image >> map[p]) & 1) injective = false;
    image |= bit(map[p]);
  }
  r.check(injective, "map is not injective");

  auto preimage = [&](Mask c) {
    Mask out = 0;
    for (std::size_t p = 0; p < map.size(); ++p)
      if ((c >> map[p]) & 1) out |= bit(p);
    return out;
  };
  // Continuity: preimages of closed sets are closed.
  std::vector<Mask> pulled;
  pulled.reserve(target.closed.size());
  bool continuous = true;
  for (Mask c : target.closed) {
    Mask pre = preimage(c);
    if (!source.is_closed(pre)) continuous = false;
    pulled.push_back(pre);
  }
  canonicalize(pulled);
  r.check(continuous, "map is not continuous");
  // Embedding: every source closed set is the trace of a target closed set.
  bool embedding = continuous && pulled == source.closed;
  r.check(embedding, "source topology differs from the pulled-back subspace topology");

  const bool surjective = image == target.all();
  if (require_surjective) r.check(surjective, "map is not surjective");
  r.note("injective", injective ? "yes" : "no");
  r.note("embedding", embedding ? "yes" : "no");
  r.note("surjective", surjective ? "yes" : "no");
  r.note("homeomorphism", injective && embedding && surjective ? "yes" : "no");
  return r;
}

}  // namespace trispec
