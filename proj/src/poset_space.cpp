#include "trispec/poset_space.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_set>

#include "trispec/error.hpp"

namespace trispec {

std::size_t enumeration_cap() {
  if (const char* env = std::getenv("TRISPEC_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::min<std::size_t>(v, kMaxPoints);
  }
  return kDefaultEnumerationCap;
}

namespace {

void validate_name(const std::string& name) {
  if (name.empty()) throw InputError("empty point name");
  if (name == "∅") throw InputError("point name '∅' is reserved");
  for (char c : name) {
    if (c == ',' || c == '{' || c == '}' || c == ' ' || c == '\t' || c == '\n')
      throw InputError("invalid character in point name '" + name + "'");
  }
}

}  // namespace

SpecSpace SpecSpace::from_indices(std::string name, std::vector<std::string> points,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& leq) {
  if (points.size() > kMaxPoints)
    throw CapExceeded("space has " + std::to_string(points.size()) + " points; at most " +
                      std::to_string(kMaxPoints) + " are supported");
  SpecSpace s;
  s.name_ = std::move(name);
  for (std::size_t i = 0; i < points.size(); ++i) {
    validate_name(points[i]);
    if (!s.index_.emplace(points[i], i).second)
      throw InputError("duplicate point '" + points[i] + "'");
  }
  s.points_ = std::move(points);
  const std::size_t n = s.points_.size();

  s.up_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) s.up_[i] = bit(i);
  for (auto [x, y] : leq) {
    if (x >= n || y >= n) throw InputError("relation refers to a point outside the space");
    s.up_[x] |= bit(y);
  }
  // Warshall closure on up-set rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if ((s.up_[i] >> k) & 1) s.up_[i] |= s.up_[k];

  s.down_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for_each_bit(s.up_[x], [&](std::size_t y) { s.down_[y] |= bit(x); });

  for (std::size_t x = 0; x < n; ++x) {
    Mask both = s.up_[x] & s.down_[x] & ~bit(x);
    if (both) {
      std::size_t y = static_cast<std::size_t>(std::countr_zero(both));
      throw InputError("cycle detected between '" + s.points_[x] + "' and '" + s.points_[y] + "'");
    }
  }
  return s;
}

SpecSpace SpecSpace::from_relations(std::string name, std::vector<std::string> points,
                                    const std::vector<std::pair<std::string, std::string>>& leq) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < points.size(); ++i) idx.emplace(points[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(leq.size());
  for (const auto& [a, b] : leq) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) throw InputError("unknown point '" + a + "' in relation");
    if (ib == idx.end()) throw InputError("unknown point '" + b + "' in relation");
    pairs.emplace_back(ia->second, ib->second);
  }
  return from_indices(std::move(name), std::move(points), pairs);
}

std::size_t SpecSpace::index_of(std::string_view point) const {
  auto it = index_.find(std::string(point));
  if (it == index_.end()) throw InputError("unknown point '" + std::string(point) + "'");
  return it->second;
}

bool SpecSpace::contains(std::string_view point) const {
  return index_.count(std::string(point)) != 0;
}

std::vector<std::pair<std::size_t, std::size_t>> SpecSpace::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t y = 0; y < size(); ++y) {
    Mask below = down_[y] & ~bit(y);
    Mask lower_covers = below;
    for_each_bit(below, [&](std::size_t z) { lower_covers &= ~(down_[z] & ~bit(z)); });
    for_each_bit(lower_covers, [&](std::size_t x) { out.emplace_back(x, y); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> SpecSpace::linear_extension() const {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return popcount(down_[a]) < popcount(down_[b]);
  });
  return order;
}

bool SpecSpace::is_down_set(Mask s) const {
  if (!is_subset(s, all())) return false;
  bool ok = true;
  for_each_bit(s, [&](std::size_t y) { ok = ok && is_subset(down_[y], s); });
  return ok;
}

bool SpecSpace::is_t0() const {
  std::unordered_set<Mask> seen(down_.begin(), down_.end());
  return seen.size() == down_.size();
}

bool SpecSpace::is_sober() const {
  if (!is_t0()) return false;
  for (std::size_t y = 0; y < size(); ++y) {
    Mask maximal = 0;
    for_each_bit(down_[y], [&](std::size_t z) {
      if ((up_[z] & down_[y]) == bit(z)) maximal |= bit(z);
    });
    if (maximal != bit(y)) return false;
  }
  return true;
}

SpecSpace SpecSpace::restrict_to(Mask keep, std::string name) const {
  if (!is_subset(keep, all())) throw InputError("restriction mask exceeds the space");
  std::vector<std::string> pts;
  std::vector<std::size_t> old_of_new;
  for_each_bit(keep, [&](std::size_t i) {
    pts.push_back(points_[i]);
    old_of_new.push_back(i);
  });
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < old_of_new.size(); ++a)
    for (std::size_t b = 0; b < old_of_new.size(); ++b)
      if (a != b && leq(old_of_new[a], old_of_new[b])) rel.emplace_back(a, b);
  return from_indices(name.empty() ? name_ : std::move(name), std::move(pts), rel);
}

std::string SpecSpace::format_set(Mask s) const {
  if (s == 0) return "∅";
  std::string out = "{";
  bool first = true;
  for_each_bit(s, [&](std::size_t i) {
    if (!first) out += ',';
    first = false;
    out += i < points_.size() ? points_[i] : "#" + std::to_string(i);
  });
  return out + "}";
}

Mask SpecSpace::mask_of(const std::vector<std::string>& names) const {
  Mask m = 0;
  for (const auto& n : names) m |= bit(index_of(n));
  return m;
}

Mask closure(const SpecSpace& space, Mask s) {
  if (!is_subset(s, space.all())) throw InputError("subset contains a point not in the space");
  Mask out = 0;
  for_each_bit(s, [&](std::size_t y) { out |= space.down(y); });
  return out;
}

namespace {

void enumerate_down_sets(const SpecSpace& space, const std::vector<std::size_t>& order,
                         const std::vector<Mask>& strictly_below, std::size_t pos, Mask current,
                         std::vector<Mask>& out) {
  if (pos == order.size()) {
    out.push_back(current);
    return;
  }
  const std::size_t p = order[pos];
  enumerate_down_sets(space, order, strictly_below, pos + 1, current, out);
  if (is_subset(strictly_below[p], current))
    enumerate_down_sets(space, order, strictly_below, pos + 1, current | bit(p), out);
}

}  // namespace

SubsetFamily enumerate_spcl(const SpecSpace& space, std::size_t cap) {
  if (space.size() > cap)
    throw CapExceeded("enumeration of " + std::to_string(space.size()) +
                      " points exceeds the cap of " + std::to_string(cap));
  std::vector<Mask> strictly_below(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) strictly_below[i] = space.down(i) & ~bit(i);

  SubsetFamily fam;
  fam.ambient_size = space.size();
  fam.kind = SubsetKind::spcl;
  enumerate_down_sets(space, space.linear_extension(), strictly_below, 0, 0, fam.members);
  std::sort(fam.members.begin(), fam.members.end(), canonical_less);
  return fam;
}

std::uint64_t count_spcl(const SpecSpace& space) {
  const std::size_t n = space.size();
  if (n == 0) return 1;

  // Process points by height so the frontier sweeps level by level.
  std::vector<int> height(n, 0);
  for (std::size_t p : space.linear_extension())
    for_each_bit(space.down(p) & ~bit(p),
                 [&](std::size_t q) { height[p] = std::max(height[p], height[q] + 1); });
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return height[a] < height[b]; });

  std::vector<Mask> lower_covers(n, 0);
  std::vector<std::size_t> position(n);
  for (std::size_t t = 0; t < n; ++t) position[order[t]] = t;
  std::vector<std::size_t> last_use(n, 0);
  for (std::size_t p = 0; p < n; ++p) last_use[p] = position[p];
  for (auto [lo, hi] : space.covers()) {
    lower_covers[hi] |= bit(lo);
    last_use[lo] = std::max(last_use[lo], position[hi]);
  }
  std::vector<Mask> retire_at(n, 0);
  for (std::size_t p = 0; p < n; ++p) retire_at[last_use[p]] |= bit(p);

  std::unordered_map<Mask, std::uint64_t> states{{0, 1}}, next;
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t v = order[t];
    next.clear();
    for (auto [state, count] : states) {
      next[state & ~retire_at[t]] += count;
      if (is_subset(lower_covers[v], state)) next[(state | bit(v)) & ~retire_at[t]] += count;
    }
    states.swap(next);
  }
  std::uint64_t total = 0;
  for (auto [state, count] : states) total += count;
  return total;
}

std::vector<Mask> prime_spcl(const SpecSpace& space) {
  std::vector<Mask> out(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) out[x] = space.all() & ~space.up(x);
  return out;
}

SpecSpace chain_space(std::size_t n) {
  std::vector<std::string> pts;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back("c" + std::to_string(i));
    if (i > 0) rel.emplace_back(i - 1, i);
  }
  return SpecSpace::from_indices("chain" + std::to_string(n), std::move(pts), rel);
}

SpecSpace discrete_space(std::size_t n) {
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
  return SpecSpace::from_indices("discrete" + std::to_string(n), std::move(pts), {});
}

SpecSpace star_space(std::size_t n) {
  std::vector<std::string> pts;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back("x" + std::to_string(i + 1));
    rel.emplace_back(i, n);
  }
  pts.push_back("g");
  return SpecSpace::from_indices("star" + std::to_string(n), std::move(pts), rel);
}

SpecSpace grid_space(std::size_t rows, std::size_t cols) {
  std::vector<std::string> pts;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      pts.push_back("r" + std::to_string(i) + "c" + std::to_string(j));
      std::size_t me = i * cols + j;
      if (i + 1 < rows) rel.emplace_back(me, me + cols);
      if (j + 1 < cols) rel.emplace_back(me, me + 1);
    }
  return SpecSpace::from_indices("grid" + std::to_string(rows) + "x" + std::to_string(cols),
                                 std::move(pts), rel);
}

}  // namespace trispec
