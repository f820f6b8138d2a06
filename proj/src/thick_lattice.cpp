#include "trispec/thick_lattice.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "trispec/error.hpp"

namespace trispec {

std::string_view origin_name(Origin o) {
  switch (o) {
    case Origin::classified: return "classified";
    case Origin::explicit_covers: return "explicit";
    case Origin::augmented: return "augmented";
    case Origin::quotient: return "quotient";
    case Origin::transported: return "transported";
  }
  return "explicit";
}

ThickLattice ThickLattice::from_rows(std::vector<std::string> ids, std::vector<Bitset> up,
                                     Bitset objects, Provenance provenance) {
  ThickLattice lat;
  const std::size_t n = ids.size();
  if (n == 0) throw InputError("a lattice needs at least one element");
  for (std::size_t i = 0; i < n; ++i) {
    if (ids[i].empty()) throw InputError("empty element id");
    if (!lat.index_.emplace(ids[i], i).second) throw InputError("duplicate element '" + ids[i] + "'");
  }
  lat.ids_ = std::move(ids);
  lat.up_ = std::move(up);
  lat.down_.assign(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a) lat.up_[a].for_each([&](std::size_t b) { lat.down_[b].set(a); });

  lat.bottom_ = n;
  lat.top_ = n;
  for (std::size_t a = 0; a < n; ++a) {
    if (lat.up_[a].count() == n) lat.bottom_ = a;
    if (lat.down_[a].count() == n) lat.top_ = a;
  }
  if (lat.bottom_ == n) throw InputError("not a lattice: no least element");
  if (lat.top_ == n) throw InputError("not a lattice: no greatest element");

  lat.upper_covers_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    Bitset dominated(n);
    lat.up_[a].for_each([&](std::size_t j) {
      if (j == a || dominated.test(j)) return;
      lat.upper_covers_[a].push_back(j);
      dominated |= lat.up_[j];
    });
  }
  lat.objects_ = std::move(objects);
  lat.provenance_ = std::move(provenance);
  return lat;
}

std::size_t ThickLattice::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw InputError("unknown element '" + std::string(id) + "'");
  return it->second;
}

bool ThickLattice::contains(std::string_view id) const { return index_.count(std::string(id)) != 0; }

std::size_t ThickLattice::join(std::size_t a, std::size_t b) const { return (up_[a] & up_[b]).first(); }

std::size_t ThickLattice::meet(std::size_t a, std::size_t b) const { return (down_[a] & down_[b]).last(); }

std::vector<std::pair<std::size_t, std::size_t>> ThickLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t c : upper_covers_[a]) out.emplace_back(a, c);
  return out;
}

std::optional<std::size_t> ThickLattice::element_of_mask(Mask m) const {
  auto it = mask_index_.find(m);
  if (it == mask_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> ThickLattice::violation() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!up_[a].test(a)) return "order is not reflexive at '" + ids_[a] + "'";
    bool linear = true;
    up_[a].for_each([&](std::size_t b) { linear = linear && b >= a; });
    if (!linear) return "element order is not a linear extension at '" + ids_[a] + "'";
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Bitset u = up_[a] & up_[b];
      std::size_t j = u.first();
      if (j == n || !u.is_subset_of(up_[j]))
        return "not a lattice: '" + ids_[a] + "' and '" + ids_[b] + "' have no join";
      Bitset d = down_[a] & down_[b];
      std::size_t m = d.last();
      if (m == n || !d.is_subset_of(down_[m]))
        return "not a lattice: '" + ids_[a] + "' and '" + ids_[b] + "' have no meet";
    }
  }
  if (objects_.size() != n) return "object set has the wrong size";
  if (!objects_.test(bottom_)) return "objects do not contain the bottom element";
  auto objs = objects_.indices();
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t k = i + 1; k < objs.size(); ++k)
      if (!objects_.test(join(objs[i], objs[k])))
        return "objects are not closed under join: '" + ids_[objs[i]] + "' v '" + ids_[objs[k]] + "'";
  return std::nullopt;
}

bool is_order_preserving(const ThickLattice& source, const ThickLattice& target, const LatticeMap& map) {
  if (map.forward.size() != source.size()) return false;
  for (std::size_t f : map.forward)
    if (f >= target.size()) return false;
  for (std::size_t a = 0; a < source.size(); ++a)
    for (std::size_t b = 0; b < source.size(); ++b)
      if (source.leq(a, b) && !target.leq(map.forward[a], map.forward[b])) return false;
  return true;
}

bool is_order_isomorphism(const ThickLattice& source, const ThickLattice& target, const LatticeMap& map) {
  if (source.size() != target.size() || !is_order_preserving(source, target, map)) return false;
  std::vector<bool> hit(target.size(), false);
  for (std::size_t f : map.forward) {
    if (hit[f]) return false;
    hit[f] = true;
  }
  for (std::size_t a = 0; a < source.size(); ++a)
    for (std::size_t b = 0; b < source.size(); ++b)
      if (target.leq(map.forward[a], map.forward[b]) && !source.leq(a, b)) return false;
  return true;
}

ThickLattice from_support_data(const SpecSpace& space, std::size_t cap) {
  SubsetFamily fam = enumerate_spcl(space, cap);
  const std::size_t n = fam.size();
  std::vector<std::string> ids;
  ids.reserve(n);
  for (Mask m : fam.members) ids.push_back(space.format_set(m));
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      if (is_subset(fam.members[a], fam.members[b])) up[a].set(b);
  Bitset objects(n);
  for (std::size_t a = 0; a < n; ++a) objects.set(a);

  ThickLattice lat = ThickLattice::from_rows(std::move(ids), std::move(up), std::move(objects),
                                             {Origin::classified, space.name()});
  lat.space_ = std::make_shared<const SpecSpace>(space);
  lat.masks_ = std::move(fam.members);
  for (std::size_t a = 0; a < n; ++a) lat.mask_index_.emplace(lat.masks_[a], a);
  return lat;
}

ThickLattice from_explicit(const std::vector<std::string>& elements,
                           const std::vector<std::pair<std::string, std::string>>& covers,
                           const std::vector<std::string>& objects,
                           const std::optional<std::string>& bottom,
                           const std::optional<std::string>& top) {
  const std::size_t n = elements.size();
  if (n == 0) throw InputError("a lattice needs at least one element");
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (!idx.emplace(elements[i], i).second) throw InputError("duplicate element '" + elements[i] + "'");
  auto lookup = [&](const std::string& id) {
    auto it = idx.find(id);
    if (it == idx.end()) throw InputError("unknown element '" + id + "'");
    return it->second;
  };

  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& [lo, hi] : covers) {
    std::size_t a = lookup(lo), b = lookup(hi);
    if (a == b) throw InputError("cycle detected at '" + lo + "'");
    succ[a].push_back(b);
    ++indeg[b];
  }
  // Kahn's algorithm; ties broken by input position so the result is stable.
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push(i);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t w : succ[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (order.size() != n) throw InputError("cycle detected in cover relations");

  std::vector<std::size_t> pos(n);
  for (std::size_t p = 0; p < n; ++p) pos[order[p]] = p;
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t p = n; p-- > 0;) {
    std::size_t v = order[p];
    up[p].set(p);
    for (std::size_t w : succ[v]) up[p] |= up[pos[w]];
  }
  std::vector<std::string> ids(n);
  for (std::size_t p = 0; p < n; ++p) ids[p] = elements[order[p]];
  Bitset objs(n);
  for (const auto& o : objects) objs.set(pos[lookup(o)]);

  ThickLattice lat = ThickLattice::from_rows(std::move(ids), std::move(up), std::move(objs),
                                             {Origin::explicit_covers, {}});
  if (bottom && lat.index_of(*bottom) != lat.bottom())
    throw InputError("declared bottom '" + *bottom + "' is not the least element");
  if (top && lat.index_of(*top) != lat.top())
    throw InputError("declared top '" + *top + "' is not the greatest element");
  if (auto v = lat.violation()) throw InputError(*v);
  return lat;
}

ThickLattice augment(const ThickLattice& base, const std::vector<std::string>& atom_labels) {
  if (atom_labels.empty()) throw InputError("augment needs at least one atom label");
  if (base.bottom() == base.top()) throw InputError("augment needs distinct bottom and top");
  std::set<std::string> seen;
  for (const auto& l : atom_labels) {
    if (l.empty()) throw InputError("empty atom label");
    if (!seen.insert(l).second) throw InputError("duplicate atom label '" + l + "'");
    if (base.contains(l)) throw InputError("atom label '" + l + "' collides with an element");
  }

  const std::size_t nb = base.size(), m = atom_labels.size(), n = nb + m;
  // New order: base elements except top, then the atoms, then top.
  std::vector<std::size_t> new_of_old(nb);
  std::size_t next = 0;
  for (std::size_t a = 0; a < nb; ++a)
    if (a != base.top()) new_of_old[a] = next++;
  const std::size_t first_atom = next;
  const std::size_t new_top = n - 1;
  new_of_old[base.top()] = new_top;

  std::vector<std::string> ids(n);
  std::vector<Bitset> up(n, Bitset(n));
  Bitset objects(n);
  for (std::size_t a = 0; a < nb; ++a) {
    std::size_t na = new_of_old[a];
    ids[na] = base.id(a);
    base.up(a).for_each([&](std::size_t b) { up[na].set(new_of_old[b]); });
    if (base.is_object(a)) objects.set(na);
  }
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t na = first_atom + k;
    ids[na] = atom_labels[k];
    up[na].set(na);
    up[na].set(new_top);
    objects.set(na);
    up[new_of_old[base.bottom()]].set(na);
  }
  std::string detail = base.provenance().detail.empty() ? std::string(origin_name(base.provenance().origin))
                                                        : base.provenance().detail;
  detail += "+[";
  for (std::size_t k = 0; k < m; ++k) detail += (k ? "," : "") + atom_labels[k];
  detail += "]";
  return ThickLattice::from_rows(std::move(ids), std::move(up), std::move(objects),
                                 {Origin::augmented, std::move(detail)});
}

std::pair<ThickLattice, LatticeMap> quotient(const ThickLattice& lat, std::size_t k) {
  if (k >= lat.size()) throw InputError("unknown element index");
  std::vector<std::size_t> keep = lat.up(k).indices();
  const std::size_t n = keep.size();
  std::vector<std::size_t> new_of_old(lat.size(), lat.size());
  for (std::size_t i = 0; i < n; ++i) new_of_old[keep[i]] = i;

  std::vector<std::string> ids(n);
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    ids[i] = lat.id(keep[i]);
    lat.up(keep[i]).for_each([&](std::size_t b) { up[i].set(new_of_old[b]); });
  }
  Bitset objects(n);
  lat.objects().for_each([&](std::size_t a) { objects.set(new_of_old[lat.join(a, k)]); });

  ThickLattice q = ThickLattice::from_rows(std::move(ids), std::move(up), std::move(objects),
                                           {Origin::quotient, lat.id(k)});
  return {std::move(q), LatticeMap{std::move(keep), MapKind::quotient_preimage}};
}

std::pair<ThickLattice, LatticeMap> quotient(const ThickLattice& lat, std::string_view k) {
  return quotient(lat, lat.index_of(k));
}

std::pair<ThickLattice, LatticeMap> transport(const ThickLattice& lat,
                                              const std::map<std::string, std::string>& relabel) {
  if (relabel.size() != lat.size()) throw InputError("relabeling is not a bijection: wrong size");
  std::set<std::string> targets;
  std::vector<std::string> ids(lat.size());
  for (std::size_t a = 0; a < lat.size(); ++a) {
    auto it = relabel.find(lat.id(a));
    if (it == relabel.end()) throw InputError("relabeling is not a bijection: '" + lat.id(a) + "' missing");
    if (!targets.insert(it->second).second)
      throw InputError("relabeling is not a bijection: '" + it->second + "' repeated");
    ids[a] = it->second;
  }
  std::vector<Bitset> up(lat.size());
  for (std::size_t a = 0; a < lat.size(); ++a) up[a] = lat.up(a);
  ThickLattice t = ThickLattice::from_rows(std::move(ids), std::move(up), lat.objects(),
                                           {Origin::transported, lat.provenance().detail});
  std::vector<std::size_t> fwd(lat.size());
  for (std::size_t a = 0; a < lat.size(); ++a) fwd[a] = a;
  return {std::move(t), LatticeMap{std::move(fwd), MapKind::iso}};
}

}  // namespace trispec
