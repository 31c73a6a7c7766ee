#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace nearfac {

// Fixed 256-bit set. Large enough for every group and graph the library
// handles (orders up to 200), and cheap to copy on the search stack.
class Bitset256 {
 public:
  static constexpr std::size_t kBits = 256;

  constexpr void set(std::size_t i) { w_[i >> 6] |= bit(i); }
  constexpr void reset(std::size_t i) { w_[i >> 6] &= ~bit(i); }
  constexpr bool test(std::size_t i) const { return (w_[i >> 6] & bit(i)) != 0; }

  constexpr bool any() const { return (w_[0] | w_[1] | w_[2] | w_[3]) != 0; }
  constexpr bool none() const { return !any(); }
  constexpr std::size_t count() const {
    return static_cast<std::size_t>(std::popcount(w_[0]) + std::popcount(w_[1]) + std::popcount(w_[2]) +
                                    std::popcount(w_[3]));
  }
  constexpr bool intersects(const Bitset256& o) const {
    return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1]) | (w_[2] & o.w_[2]) | (w_[3] & o.w_[3])) != 0;
  }

  // Index of the lowest set bit, or kBits when empty.
  constexpr std::size_t first() const {
    for (std::size_t k = 0; k < 4; ++k) {
      if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
    }
    return kBits;
  }
  // Lowest set bit strictly above i, or kBits.
  constexpr std::size_t next(std::size_t i) const {
    ++i;
    if (i >= kBits) return kBits;
    std::size_t k = i >> 6;
    std::uint64_t word = w_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (word) return k * 64 + static_cast<std::size_t>(std::countr_zero(word));
      if (++k == 4) return kBits;
      word = w_[k];
    }
  }

  static constexpr Bitset256 prefix(std::size_t n) {
    Bitset256 b;
    for (std::size_t k = 0; k < 4; ++k) {
      if (n >= (k + 1) * 64) {
        b.w_[k] = ~std::uint64_t{0};
      } else if (n > k * 64) {
        b.w_[k] = (std::uint64_t{1} << (n - k * 64)) - 1;
      }
    }
    return b;
  }

  constexpr Bitset256& operator&=(const Bitset256& o) {
    for (std::size_t k = 0; k < 4; ++k) w_[k] &= o.w_[k];
    return *this;
  }
  constexpr Bitset256& operator|=(const Bitset256& o) {
    for (std::size_t k = 0; k < 4; ++k) w_[k] |= o.w_[k];
    return *this;
  }
  constexpr Bitset256& operator^=(const Bitset256& o) {
    for (std::size_t k = 0; k < 4; ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  // Set difference.
  constexpr Bitset256& operator-=(const Bitset256& o) {
    for (std::size_t k = 0; k < 4; ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend constexpr Bitset256 operator&(Bitset256 a, const Bitset256& b) { return a &= b; }
  friend constexpr Bitset256 operator|(Bitset256 a, const Bitset256& b) { return a |= b; }
  friend constexpr Bitset256 operator-(Bitset256 a, const Bitset256& b) { return a -= b; }
  friend constexpr bool operator==(const Bitset256&, const Bitset256&) = default;

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::uint64_t word = w_[k]; word; word &= word - 1) f(k * 64 + static_cast<std::size_t>(std::countr_zero(word)));
    }
  }

 private:
  static constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i & 63); }
  std::array<std::uint64_t, 4> w_{};
};

}  // namespace nearfac
