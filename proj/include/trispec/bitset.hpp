#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace trispec {

/// Point sets of spaces with at most 64 points.
using Mask = std::uint64_t;

inline constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
inline constexpr Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
inline constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline int popcount(Mask m) { return std::popcount(m); }

/// Calls fn(i) for every set bit, ascending.
template <typename Fn>
void for_each_bit(Mask m, Fn&& fn) {
  while (m) {
    fn(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

/// Popcount first, then numeric value.
inline bool canonical_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

/// Fixed-size dynamic bitset used for lattice order rows.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  void set(std::size_t i) { words_[i >> 6] |= bit(i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~bit(i & 63); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (Mask w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (Mask w : words_)
      if (w) return false;
    return true;
  }

  /// Index of the lowest set bit, or size() if empty.
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return size_;
  }
  /// Index of the highest set bit, or size() if empty.
  std::size_t last() const {
    for (std::size_t k = words_.size(); k-- > 0;)
      if (words_[k]) return k * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[k]));
    return size_;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Mask w = words_[k];
      while (w) {
        fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Mask> words_;
};

}  // namespace trispec
