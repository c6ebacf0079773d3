#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace excsym {

/// Upper bound on the number of positive roots of any supported system.
/// E8 has 120, BC8 has 72; everything at rank <= 8 fits.
inline constexpr std::size_t kMaxPositiveRoots = 128;

/// Dense 128-bit set of positive-root indices.
///
/// Every subsystem the library deals with is closed under negation, so it is
/// fully described by its positive part. Bit p set means both alpha_p and
/// -alpha_p are members.
struct PosMask {
  std::array<std::uint64_t, 2> words{0, 0};

  constexpr bool test(std::size_t p) const noexcept {
    return (words[p >> 6] >> (p & 63)) & 1u;
  }
  constexpr void set(std::size_t p) noexcept { words[p >> 6] |= std::uint64_t{1} << (p & 63); }
  constexpr void reset(std::size_t p) noexcept {
    words[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
  }
  constexpr bool empty() const noexcept { return (words[0] | words[1]) == 0; }
  constexpr int count() const noexcept {
    return std::popcount(words[0]) + std::popcount(words[1]);
  }

  friend constexpr PosMask operator&(PosMask a, PosMask b) noexcept {
    return {{a.words[0] & b.words[0], a.words[1] & b.words[1]}};
  }
  friend constexpr PosMask operator|(PosMask a, PosMask b) noexcept {
    return {{a.words[0] | b.words[0], a.words[1] | b.words[1]}};
  }
  /// Set difference a \ b.
  friend constexpr PosMask operator-(PosMask a, PosMask b) noexcept {
    return {{a.words[0] & ~b.words[0], a.words[1] & ~b.words[1]}};
  }
  constexpr PosMask& operator|=(PosMask b) noexcept {
    words[0] |= b.words[0];
    words[1] |= b.words[1];
    return *this;
  }
  constexpr PosMask& operator&=(PosMask b) noexcept {
    words[0] &= b.words[0];
    words[1] &= b.words[1];
    return *this;
  }

  constexpr bool subset_of(PosMask b) const noexcept { return (*this - b).empty(); }

  friend constexpr bool operator==(PosMask, PosMask) noexcept = default;
  friend constexpr auto operator<=>(PosMask a, PosMask b) noexcept {
    // Compare high word first so the ordering matches the integer value.
    if (auto c = a.words[1] <=> b.words[1]; c != 0) return c;
    return a.words[0] <=> b.words[0];
  }

  /// Calls f(p) for every set bit in increasing order.
  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::size_t w = 0; w < 2; ++w) {
      std::uint64_t bits = words[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](std::size_t p) { out.push_back(p); });
    return out;
  }

  static constexpr PosMask first_n(std::size_t n) noexcept {
    PosMask m;
    if (n >= 128) return {{~std::uint64_t{0}, ~std::uint64_t{0}}};
    if (n >= 64) {
      m.words[0] = ~std::uint64_t{0};
      m.words[1] = n == 64 ? 0 : (std::uint64_t{1} << (n - 64)) - 1;
    } else {
      m.words[0] = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    }
    return m;
  }

  /// 32 lowercase hex digits, high word first.
  std::string hex() const;
  static PosMask from_hex(const std::string& s);
};

struct PosMaskHash {
  std::size_t operator()(const PosMask& m) const noexcept {
    std::uint64_t h = m.words[0] * 0x9E3779B97F4A7C15ull;
    h ^= (m.words[1] + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2));
    h ^= h >> 31;
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ull);
  }
};

/// A subsystem closed under negation, stored as its positive part.
/// Canonical form is the mask itself (the sorted positive-index set).
struct Subsystem {
  PosMask positive;

  bool contains_positive(std::size_t p) const noexcept { return positive.test(p); }
  std::size_t positive_count() const noexcept { return static_cast<std::size_t>(positive.count()); }
  bool empty() const noexcept { return positive.empty(); }

  friend constexpr bool operator==(const Subsystem&, const Subsystem&) noexcept = default;
  friend constexpr auto operator<=>(const Subsystem& a, const Subsystem& b) noexcept {
    return a.positive <=> b.positive;
  }
};

}  // namespace excsym
