#include "trispec/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "trispec/error.hpp"

namespace trispec::oracle {

std::vector<std::size_t> scan_primes(const ThickLattice& lat) {
  const std::size_t n = lat.size();
  if (n > kMaxScanElements) throw CapExceeded("prime scan is limited to 4096 elements");
  std::vector<std::size_t> out;
  std::vector<std::size_t> above;
  for (std::size_t p = 0; p < n; ++p) {
    above.clear();
    for (std::size_t x = 0; x < n; ++x)
      if (x != p && lat.leq(p, x)) above.push_back(x);
    std::size_t minimal = 0;
    for (std::size_t m : above) {
      bool is_min = std::none_of(above.begin(), above.end(),
                                 [&](std::size_t q) { return q != m && lat.leq(q, m); });
      if (is_min && ++minimal > 1) break;
    }
    if (minimal == 1) out.push_back(p);
  }
  return out;
}

std::vector<Mask> scan_prime_subsets(const SpecSpace& space, std::size_t cap) {
  const std::size_t n = space.size();
  if (n > cap) throw CapExceeded("subset scan of " + std::to_string(n) + " points exceeds the cap");
  std::vector<Mask> spcl;
  for (Mask w = 0; w <= full_mask(n); ++w) {
    bool closed_down = true;
    for (std::size_t x = 0; x < n && closed_down; ++x) {
      if (!((w >> x) & 1)) continue;
      for (std::size_t y = 0; y < n; ++y)
        if (space.leq(y, x) && !((w >> y) & 1)) closed_down = false;
    }
    if (closed_down) spcl.push_back(w);
    if (w == full_mask(n)) break;
  }
  std::vector<Mask> out;
  for (Mask w : spcl) {
    std::vector<Mask> above;
    for (Mask t : spcl)
      if (t != w && is_subset(w, t)) above.push_back(t);
    std::size_t minimal = 0;
    for (Mask t : above) {
      bool is_min = std::none_of(above.begin(), above.end(),
                                 [&](Mask s) { return s != t && is_subset(s, t); });
      if (is_min) ++minimal;
    }
    if (minimal == 1) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

/// Order on points 0..k-1 as up rows (reflexive).
using Rows = std::vector<Mask>;

SpecSpace to_space(const Rows& up, std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i));
    for_each_bit(up[i] & ~bit(i), [&](std::size_t j) { rel.emplace_back(i, j); });
  }
  return SpecSpace::from_indices("poset", std::move(names), rel);
}

void extend(Rows& up, std::size_t k, std::size_t n, const std::function<void(const Rows&)>& emit) {
  if (k == n) {
    emit(up);
    return;
  }
  std::vector<Mask> down(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for_each_bit(up[i], [&](std::size_t j) { down[j] |= bit(i); });
  std::vector<Mask> down_sets, up_sets;
  for (Mask s = 0; s < bit(k); ++s) {
    bool d = true, u = true;
    for_each_bit(s, [&](std::size_t x) {
      d = d && is_subset(down[x], s);
      u = u && is_subset(up[x], s);
    });
    if (d) down_sets.push_back(s);
    if (u) up_sets.push_back(s);
  }
  for (Mask below : down_sets) {
    for (Mask above : up_sets) {
      if (below & above) continue;
      bool ok = true;
      for_each_bit(below, [&](std::size_t d) { ok = ok && is_subset(above, up[d]); });
      if (!ok) continue;
      Rows next = up;
      next.resize(k + 1);
      next[k] = bit(k) | above;
      for_each_bit(below, [&](std::size_t d) { next[d] |= bit(k); });
      extend(next, k + 1, n, emit);
    }
  }
}

std::uint64_t code_of(const Rows& up, const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) code = (code << 1) | ((up[perm[i]] >> perm[j]) & 1);
  return code;
}

std::uint64_t canonical_rows(const Rows& up) {
  std::vector<std::size_t> perm(up.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, code_of(up, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

void for_each_poset(std::size_t n, bool up_to_iso, const std::function<void(const SpecSpace&)>& fn) {
  if (n > kMaxPosetPoints) throw InputError("poset generation is limited to 6 points");
  std::unordered_set<std::uint64_t> seen;
  Rows up;
  extend(up, 0, n, [&](const Rows& rows) {
    if (up_to_iso && !seen.insert(canonical_rows(rows)).second) return;
    fn(to_space(rows, n));
  });
}

std::vector<SpecSpace> all_posets(std::size_t n, bool up_to_iso) {
  std::vector<SpecSpace> out;
  for_each_poset(n, up_to_iso, [&](const SpecSpace& s) { out.push_back(s); });
  return out;
}

std::uint64_t canonical_code(const SpecSpace& space) {
  if (space.size() > kMaxPosetPoints) throw InputError("canonical codes are limited to 6 points");
  Rows up(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) up[i] = space.up(i);
  return canonical_rows(up);
}

namespace {

struct Search {
  const FiniteTopology& a;
  const FiniteTopology& b;
  std::vector<Mask> cl_a, cl_b;
  std::vector<std::pair<int, int>> inv_a, inv_b;
  std::vector<std::size_t> map;
  Mask used = 0;

  bool consistent(std::size_t x, std::size_t fx) const {
    for (std::size_t y = 0; y < x; ++y) {
      std::size_t fy = map[y];
      if (((cl_a[y] >> x) & 1) != ((cl_b[fy] >> fx) & 1)) return false;
      if (((cl_a[x] >> y) & 1) != ((cl_b[fx] >> fy) & 1)) return false;
    }
    return true;
  }

  bool maps_closed_sets() const {
    for (Mask c : a.closed) {
      Mask image = 0;
      for_each_bit(c, [&](std::size_t x) { image |= bit(map[x]); });
      if (!b.is_closed(image)) return false;
    }
    return true;
  }

  bool run(std::size_t x) {
    if (x == a.size()) return maps_closed_sets();
    for (std::size_t fx = 0; fx < b.size(); ++fx) {
      if ((used >> fx) & 1 || inv_a[x] != inv_b[fx] || !consistent(x, fx)) continue;
      map[x] = fx;
      used |= bit(fx);
      if (run(x + 1)) return true;
      used &= ~bit(fx);
    }
    return false;
  }
};

std::vector<std::pair<int, int>> invariants(const std::vector<Mask>& cl) {
  std::vector<std::pair<int, int>> inv(cl.size());
  for (std::size_t p = 0; p < cl.size(); ++p) {
    int above = 0;
    for (Mask c : cl) above += (c >> p) & 1;
    inv[p] = {popcount(cl[p]), above};
  }
  return inv;
}

}  // namespace

std::optional<std::vector<std::size_t>> homeomorphic(const FiniteTopology& a, const FiniteTopology& b) {
  if (a.size() > kMaxHomeomorphismPoints || b.size() > kMaxHomeomorphismPoints)
    throw CapExceeded("homeomorphism search is limited to 12 points");
  if (a.size() != b.size() || a.closed.size() != b.closed.size()) return std::nullopt;
  Search s{a, b, a.point_closures(), b.point_closures(), {}, {}, std::vector<std::size_t>(a.size()), 0};
  s.inv_a = invariants(s.cl_a);
  s.inv_b = invariants(s.cl_b);
  auto sa = s.inv_a, sb = s.inv_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  if (!s.run(0)) return std::nullopt;
  return s.map;
}

std::uint64_t grid_downsets_transfer(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) return 1;
  // ways[h] = number of admissible prefixes whose last column has height h.
  std::vector<std::uint64_t> ways(rows + 1, 1);
  for (std::size_t c = 1; c < cols; ++c) {
    std::vector<std::uint64_t> next(rows + 1, 0);
    for (std::size_t h = 0; h <= rows; ++h)
      for (std::size_t h2 = 0; h2 <= h; ++h2) next[h2] += ways[h];
    ways.swap(next);
  }
  return std::accumulate(ways.begin(), ways.end(), std::uint64_t{0});
}

}  // namespace trispec::oracle
