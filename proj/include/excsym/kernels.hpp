#pragma once

// Batch kernels over PosMask arrays.
//
// These are the inner loops of the Weyl-orbit minima: one query set is
// intersected with every member of an enumerated orbit. Each kernel has a
// portable scalar reference implementation and vector variants (AVX2 on
// x86-64, NEON on AArch64). The public entry points dispatch at runtime to
// the best variant the CPU supports; setting EXCSYM_SIMD=scalar in the
// environment forces the reference path.
//
// All variants return identical results, including tie-breaking: the
// reported index is always the first batch position attaining the minimum.

#include "excsym/rootset.hpp"

#include <array>
#include <cstddef>
#include <limits>
#include <span>
#include <string_view>

namespace excsym::kernels {

static_assert(sizeof(PosMask) == 16, "PosMask must be two packed words");

/// Up to three (class mask, weight) pairs; weighted size of a set S is
/// sum_k weight_k * |S & mask_k|.
struct WeightClasses {
  std::array<PosMask, 3> masks{};
  std::array<int, 3> weights{};
  int count = 0;
};

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct MinResult {
  int value = std::numeric_limits<int>::max();
  std::size_t index = npos;

  friend bool operator==(const MinResult&, const MinResult&) = default;
};

/// min over b in batch of weighted |query & b|.
MinResult min_weighted_intersection(PosMask query, std::span<const PosMask> batch,
                                    const WeightClasses& weights);

/// First position whose member is disjoint from query, or npos.
std::size_t first_disjoint(PosMask query, std::span<const PosMask> batch);

/// Name of the variant the dispatcher selected: "scalar", "avx2" or "neon".
std::string_view active_backend();

namespace scalar {
MinResult min_weighted_intersection(PosMask query, std::span<const PosMask> batch,
                                    const WeightClasses& weights);
std::size_t first_disjoint(PosMask query, std::span<const PosMask> batch);
}  // namespace scalar

namespace avx2 {
bool available() noexcept;
MinResult min_weighted_intersection(PosMask query, std::span<const PosMask> batch,
                                    const WeightClasses& weights);
std::size_t first_disjoint(PosMask query, std::span<const PosMask> batch);
}  // namespace avx2

namespace neon {
bool available() noexcept;
MinResult min_weighted_intersection(PosMask query, std::span<const PosMask> batch,
                                    const WeightClasses& weights);
std::size_t first_disjoint(PosMask query, std::span<const PosMask> batch);
}  // namespace neon

}  // namespace excsym::kernels
