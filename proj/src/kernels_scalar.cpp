#include "excsym/kernels.hpp"

#include <cstdlib>
#include <string>

namespace excsym::kernels {

namespace scalar {

MinResult min_weighted_intersection(PosMask query, std::span<const PosMask> batch,
                                    const WeightClasses& weights) {
  std::array<PosMask, 3> q{};
  for (int k = 0; k < weights.count; ++k) q[k] = query & weights.masks[k];

  MinResult best;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    int v = 0;
    for (int k = 0; k < weights.count; ++k) v += weights.weights[k] * (q[k] & batch[i]).count();
    if (v < best.value) {
      best = {v, i};
      if (v == 0) break;
    }
  }
  return best;
}

std::size_t first_disjoint(PosMask query, std::span<const PosMask> batch) {
  for (std::size_t i = 0; i < batch.size(); ++i)
    if ((query & batch[i]).empty()) return i;
  return npos;
}

}  // namespace scalar

namespace {

struct Backend {
  std::string_view name;
  MinResult (*min_weighted)(PosMask, std::span<const PosMask>, const WeightClasses&);
  std::size_t (*disjoint)(PosMask, std::span<const PosMask>);
};

Backend select_backend() {
  const char* forced = std::getenv("EXCSYM_SIMD");
  const std::string want = forced ? forced : "";
  if (want != "scalar") {
    if (avx2::available() && (want.empty() || want == "avx2"))
      return {"avx2", &avx2::min_weighted_intersection, &avx2::first_disjoint};
    if (neon::available() && (want.empty() || want == "neon"))
      return {"neon", &neon::min_weighted_intersection, &neon::first_disjoint};
  }
  return {"scalar", &scalar::min_weighted_intersection, &scalar::first_disjoint};
}

const Backend& backend() {
  static const Backend b = select_backend();
  return b;
}

}  // namespace

MinResult min_weighted_intersection(PosMask query, std::span<const PosMask> batch,
                                    const WeightClasses& weights) {
  return backend().min_weighted(query, batch, weights);
}

std::size_t first_disjoint(PosMask query, std::span<const PosMask> batch) {
  return backend().disjoint(query, batch);
}

std::string_view active_backend() { return backend().name; }

}  // namespace excsym::kernels
