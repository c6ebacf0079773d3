#include "excsym/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#define EXCSYM_NEON 1
#else
#define EXCSYM_NEON 0
#endif

namespace excsym::kernels::neon {

#if EXCSYM_NEON

namespace {

inline uint8x16_t load(const PosMask& m) {
  return vld1q_u8(reinterpret_cast<const std::uint8_t*>(m.words.data()));
}

}  // namespace

// NEON is mandatory on AArch64.
bool available() noexcept { return true; }

MinResult min_weighted_intersection(PosMask query, std::span<const PosMask> batch,
                                    const WeightClasses& weights) {
  std::array<uint8x16_t, 3> q{};
  for (int k = 0; k < weights.count; ++k) q[k] = load(query & weights.masks[k]);

  MinResult best;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const uint8x16_t b = load(batch[i]);
    int v = 0;
    for (int k = 0; k < weights.count; ++k)
      v += weights.weights[k] * static_cast<int>(vaddlvq_u8(vcntq_u8(vandq_u8(b, q[k]))));
    if (v < best.value) {
      best = {v, i};
      if (v == 0) break;
    }
  }
  return best;
}

std::size_t first_disjoint(PosMask query, std::span<const PosMask> batch) {
  const uint8x16_t q = load(query);
  for (std::size_t i = 0; i < batch.size(); ++i)
    if (vmaxvq_u8(vandq_u8(load(batch[i]), q)) == 0) return i;
  return npos;
}

#else

bool available() noexcept { return false; }

MinResult min_weighted_intersection(PosMask query, std::span<const PosMask> batch,
                                    const WeightClasses& weights) {
  return scalar::min_weighted_intersection(query, batch, weights);
}

std::size_t first_disjoint(PosMask query, std::span<const PosMask> batch) {
  return scalar::first_disjoint(query, batch);
}

#endif

}  // namespace excsym::kernels::neon
