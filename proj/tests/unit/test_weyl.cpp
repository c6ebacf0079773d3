#include "excsym/subsystems.hpp"
#include "excsym/weyl.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <cstdint>
#include <set>
#include <thread>

using namespace excsym;

namespace {

std::set<PosMask> brute_orbit(const RootSystem& rs, const std::vector<std::vector<std::uint16_t>>& group, PosMask seed) {
  std::set<PosMask> out;
  for (const auto& w : group) out.insert(oracle::image(rs, w, seed));
  return out;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("excsym-weyl-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("group orders against element-by-element enumeration") {
    struct Case {
      Family f;
      int r;
      std::uint64_t order;
    };
    for (const auto& c : {Case{Family::A, 2, 6}, Case{Family::G, 2, 12}, Case{Family::F, 4, 1152},
                          Case{Family::C, 3, 48}, Case{Family::BC, 2, 8}, Case{Family::D, 4, 192}}) {
      const auto rs = build_root_system(c.f, c.r);
      CHECK(oracle::weyl_elements(rs).size() == c.order);
      CHECK(group_order(rs) == c.order);
    }
  }

  TEST_CASE("exceptional group orders") {
    CHECK(group_order(build_root_system(Family::E, 6)) == 51840);
    CHECK(group_order(build_root_system(Family::E, 7)) == 2903040);
    CHECK(group_order(build_root_system(Family::E, 8)) == 696729600);
  }

  TEST_CASE("small orbit sizes") {
    const auto a2 = build_root_system(Family::A, 2);
    CHECK(orbit_of_subsystem(a2, parabolic_subsystem(a2, 0b01)).size() == 3);
    const auto g2 = build_root_system(Family::G, 2);
    CHECK(g2.root_class(1) == RootClass::Long);
    CHECK(orbit_of_subsystem(g2, parabolic_subsystem(g2, 0b10)).size() == 3);
    const auto c3 = build_root_system(Family::C, 3);
    CHECK(orbit_of_subsystem(c3, parabolic_subsystem(c3, 0b110)).size() == 3);
  }

  TEST_CASE("orbits match brute force and divide the group order") {
    for (auto [f, r] : {std::pair{Family::F, 4}, std::pair{Family::C, 3}, std::pair{Family::G, 2}, std::pair{Family::BC, 2}}) {
      const auto rs = build_root_system(f, r);
      const auto group = oracle::weyl_elements(rs);
      for (BaseSubset j = 0; j < (BaseSubset{1} << r); ++j) {
        const auto seed = parabolic_subsystem(rs, j);
        const auto orbit = orbit_of_subsystem(rs, seed);
        const auto expect = brute_orbit(rs, group, seed.positive);
        REQUIRE(orbit.size() == expect.size());
        for (const auto& m : orbit.members) CHECK(expect.count(m.positive) == 1);
        CHECK(group.size() % orbit.size() == 0);
        CHECK(std::is_sorted(orbit.members.begin(), orbit.members.end()));
      }
    }
  }

  TEST_CASE("parallel enumeration gives the same orbit") {
    const auto rs = build_root_system(Family::E, 7);
    const auto seed = parabolic_subsystem(rs, 0b0010101);
    const auto one = orbit_of_subsystem(rs, seed, {kDefaultOrbitCeiling, 1});
    const auto four = orbit_of_subsystem(rs, seed, {kDefaultOrbitCeiling, 4});
    CHECK(one.members == four.members);
    CHECK(group_order(rs) % one.size() == 0);
  }

  TEST_CASE("orbit words map the seed onto each member") {
    const auto rs = build_root_system(Family::F, 4);
    const auto seed = parabolic_subsystem(rs, 0b0011);
    const WeylAction action(rs);
    const auto with_words = action.orbit_with_words(seed);
    CHECK(with_words.size() == action.orbit(seed).size());
    for (const auto& [member, w] : with_words) CHECK(apply(rs, w, seed) == member);
  }

  TEST_CASE("ceilings raise instead of truncating") {
    const auto rs = build_root_system(Family::E, 8);
    const auto a1 = parabolic_subsystem(rs, 0b1);
    CHECK_THROWS_AS(orbit_of_subsystem(rs, a1, {10, 1}), ResourceLimitError);
    CHECK_THROWS_AS(group_order(rs, 100), ResourceLimitError);
  }

  TEST_CASE("conjugacy") {
    const auto rs = build_root_system(Family::C, 3);
    // A1 on e1 - e2 and A1 on e2 + e3 are conjugate; the long A1 is not.
    const auto s1 = parabolic_subsystem(rs, 0b001);
    const auto orbit = orbit_of_subsystem(rs, s1);
    CHECK(are_conjugate(rs, s1, orbit.members.back()));
    CHECK_FALSE(are_conjugate(rs, s1, parabolic_subsystem(rs, 0b100)));
  }

  TEST_CASE("orbit cache memoises and persists") {
    TempDir tmp;
    const auto rs = build_root_system(Family::F, 4);
    const WeylAction action(rs);
    const auto seed = parabolic_subsystem(rs, 0b0110);
    OrbitCache cache(tmp.path);
    const auto first = cache.get(action, seed);
    const auto again = cache.get(action, seed);
    CHECK(first == again);
    CHECK(cache.computed() == 1);
    CHECK(cache.inventory().size() == 1);

    OrbitCache reload(tmp.path);
    const auto loaded = reload.get(action, seed);
    CHECK(reload.loaded_from_disk() == 1);
    CHECK(reload.computed() == 0);
    CHECK(loaded->members == first->members);
  }

  TEST_CASE("corrupt cache files are ignored") {
    TempDir tmp;
    const auto rs = build_root_system(Family::C, 3);
    const WeylAction action(rs);
    const auto seed = parabolic_subsystem(rs, 0b011);
    const auto orbit = action.orbit(seed);
    const auto file = tmp.path / "x.orb";
    OrbitCache::write_file(file, rs.key(), seed, orbit);
    CHECK(OrbitCache::read_file(file, rs.key(), seed).has_value());
    CHECK_FALSE(OrbitCache::read_file(file, "other", seed).has_value());
    CHECK_FALSE(OrbitCache::read_file(file, rs.key(), parabolic_subsystem(rs, 0b001)).has_value());
    {
      std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
      f.seekp(-3, std::ios::end);
      f.put('\x55');
    }
    CHECK_FALSE(OrbitCache::read_file(file, rs.key(), seed).has_value());
    std::filesystem::resize_file(file, 20);
    CHECK_FALSE(OrbitCache::read_file(file, rs.key(), seed).has_value());
    CHECK_FALSE(OrbitCache::read_file(tmp.path / "missing.orb", rs.key(), seed).has_value());
  }

  TEST_CASE("concurrent requests compute once") {
    const auto rs = build_root_system(Family::E, 6);
    const WeylAction action(rs);
    const auto seed = parabolic_subsystem(rs, 0b000011);
    OrbitCache cache;
    std::vector<std::shared_ptr<const SubsystemOrbit>> got(8);
    {
      std::vector<std::jthread> pool;
      for (std::size_t i = 0; i < got.size(); ++i) pool.emplace_back([&, i] { got[i] = cache.get(action, seed); });
    }
    CHECK(cache.computed() == 1);
    for (const auto& g : got) CHECK(g == got.front());
  }
}
