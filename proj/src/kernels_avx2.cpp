#include "excsym/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define EXCSYM_X86 1
#else
#define EXCSYM_X86 0
#endif

namespace excsym::kernels::avx2 {

#if EXCSYM_X86

namespace {

#define EXCSYM_AVX2 __attribute__((target("avx2")))

// Per-64-bit-lane popcount via the nibble lookup table.
EXCSYM_AVX2 inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

EXCSYM_AVX2 inline __m256i broadcast(PosMask m) {
  return _mm256_broadcastsi128_si256(_mm_loadu_si128(reinterpret_cast<const __m128i*>(m.words.data())));
}

}  // namespace

bool available() noexcept { return __builtin_cpu_supports("avx2"); }

EXCSYM_AVX2 MinResult min_weighted_intersection(PosMask query, std::span<const PosMask> batch,
                                                const WeightClasses& weights) {
  std::array<__m256i, 3> q{};
  std::array<__m256i, 3> w{};
  std::array<PosMask, 3> qs{};
  for (int k = 0; k < weights.count; ++k) {
    qs[k] = query & weights.masks[k];
    q[k] = broadcast(qs[k]);
    w[k] = _mm256_set1_epi64x(weights.weights[k]);
  }

  MinResult best;
  const std::size_t n = batch.size();
  std::size_t i = 0;
  // Two masks per register: lanes {0,1} hold batch[i], lanes {2,3} batch[i+1].
  for (; i + 2 <= n; i += 2) {
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(batch[i].words.data()));
    __m256i acc = _mm256_setzero_si256();
    for (int k = 0; k < weights.count; ++k)
      acc = _mm256_add_epi64(acc, _mm256_mul_epu32(popcount_epi64(_mm256_and_si256(b, q[k])), w[k]));
    const __m256i sum = _mm256_add_epi64(acc, _mm256_shuffle_epi32(acc, _MM_SHUFFLE(1, 0, 3, 2)));
    const int v0 = static_cast<int>(_mm256_extract_epi64(sum, 0));
    const int v1 = static_cast<int>(_mm256_extract_epi64(sum, 2));
    if (v0 < best.value) best = {v0, i};
    if (v1 < best.value) best = {v1, i + 1};
    if (best.value == 0) return best;
  }
  for (; i < n; ++i) {
    int v = 0;
    for (int k = 0; k < weights.count; ++k) v += weights.weights[k] * (qs[k] & batch[i]).count();
    if (v < best.value) best = {v, i};
  }
  return best;
}

EXCSYM_AVX2 std::size_t first_disjoint(PosMask query, std::span<const PosMask> batch) {
  const __m256i q = broadcast(query);
  const __m256i zero = _mm256_setzero_si256();
  const std::size_t n = batch.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(batch[i].words.data()));
    const __m256i eq = _mm256_cmpeq_epi64(_mm256_and_si256(b, q), zero);
    const int bits = _mm256_movemask_pd(_mm256_castsi256_pd(eq));
    if ((bits & 0x3) == 0x3) return i;
    if ((bits & 0xc) == 0xc) return i + 1;
  }
  for (; i < n; ++i)
    if ((query & batch[i]).empty()) return i;
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

}  // namespace excsym::kernels::avx2
