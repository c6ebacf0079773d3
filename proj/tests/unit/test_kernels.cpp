#include "excsym/kernels.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace excsym;
using namespace excsym::kernels;

namespace {

PosMask random_mask(std::mt19937_64& rng, double density) {
  std::bernoulli_distribution bit(density);
  PosMask m;
  for (std::size_t i = 0; i < 128; ++i)
    if (bit(rng)) m.set(i);
  return m;
}

WeightClasses random_weights(std::mt19937_64& rng) {
  WeightClasses w;
  std::uniform_int_distribution<int> cls(0, 2), mult(1, 9);
  w.count = 3;
  for (std::size_t i = 0; i < 128; ++i) w.masks[static_cast<std::size_t>(cls(rng))].set(i);
  for (auto& x : w.weights) x = mult(rng);
  return w;
}

// Straight-line reference used to pin the scalar kernel itself.
MinResult reference_min(PosMask q, const std::vector<PosMask>& batch, const WeightClasses& w) {
  MinResult best;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    int v = 0;
    for (int k = 0; k < w.count; ++k)
      for (std::size_t b = 0; b < 128; ++b)
        if (q.test(b) && batch[i].test(b) && w.masks[static_cast<std::size_t>(k)].test(b)) v += w.weights[static_cast<std::size_t>(k)];
    if (v < best.value) best = {v, i};
  }
  return best;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar kernel matches a bit-by-bit reference") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const auto w = random_weights(rng);
      std::vector<PosMask> batch(static_cast<std::size_t>(1 + trial % 37));
      for (auto& m : batch) m = random_mask(rng, 0.3);
      const auto q = random_mask(rng, 0.5);
      CHECK(scalar::min_weighted_intersection(q, batch, w) == reference_min(q, batch, w));
    }
  }

  TEST_CASE("vector variants agree with the scalar reference") {
    std::mt19937_64 rng(11);
    const bool have_avx2 = avx2::available();
    const bool have_neon = neon::available();
    for (int trial = 0; trial < 500; ++trial) {
      const auto w = random_weights(rng);
      // Odd lengths exercise the tails; sparse masks make zero minima and
      // the early exit reachable.
      std::vector<PosMask> batch(static_cast<std::size_t>(trial % 67));
      const double density = trial % 3 == 0 ? 0.02 : 0.4;
      for (auto& m : batch) m = random_mask(rng, density);
      const auto q = random_mask(rng, 0.5);
      const auto expect_min = scalar::min_weighted_intersection(q, batch, w);
      const auto expect_disjoint = scalar::first_disjoint(q, batch);
      CHECK(min_weighted_intersection(q, batch, w) == expect_min);
      CHECK(first_disjoint(q, batch) == expect_disjoint);
      if (have_avx2) {
        CHECK(avx2::min_weighted_intersection(q, batch, w) == expect_min);
        CHECK(avx2::first_disjoint(q, batch) == expect_disjoint);
      }
      if (have_neon) {
        CHECK(neon::min_weighted_intersection(q, batch, w) == expect_min);
        CHECK(neon::first_disjoint(q, batch) == expect_disjoint);
      }
    }
  }

  TEST_CASE("ties report the first minimal position") {
    WeightClasses w;
    w.count = 1;
    w.masks[0] = PosMask::first_n(128);
    w.weights[0] = 1;
    PosMask q = PosMask::first_n(10);
    std::vector<PosMask> batch(9, PosMask::first_n(4));
    batch[5] = PosMask::first_n(2);
    batch[7] = PosMask::first_n(2);
    const auto r = min_weighted_intersection(q, batch, w);
    CHECK(r.value == 2);
    CHECK(r.index == 5);
    if (avx2::available()) CHECK(avx2::min_weighted_intersection(q, batch, w) == r);
  }

  TEST_CASE("empty batches") {
    WeightClasses w;
    const std::vector<PosMask> none;
    CHECK(min_weighted_intersection(PosMask{}, none, w).index == npos);
    CHECK(first_disjoint(PosMask{}, none) == npos);
  }

  TEST_CASE("backend name is one of the known variants") {
    const auto b = active_backend();
    CHECK((b == "scalar" || b == "avx2" || b == "neon"));
  }
}
