#include "excsym/subsystems.hpp"
#include "excsym/weyl.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace excsym;

namespace {

std::vector<std::string> labels(const std::vector<AnnihilatorType>& v) {
  std::vector<std::string> out;
  for (const auto& a : v) out.push_back(a.label);
  return out;
}

Subsystem random_seed(const RootSystem& rs, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, rs.num_positive() - 1);
  std::uniform_int_distribution<int> size(0, 4);
  Subsystem s;
  for (int k = size(rng); k > 0; --k) s.positive.set(pick(rng));
  return s;
}

}  // namespace

TEST_SUITE("subsystems") {
  TEST_CASE("closure examples") {
    const auto a2 = build_root_system(Family::A, 2);
    Subsystem one;
    one.positive.set(0);
    CHECK(r_closure(a2, one) == one);
    Subsystem two;
    two.positive.set(0);
    two.positive.set(1);
    CHECK(r_closure(a2, two).positive == a2.all_positive());

    const auto c3 = build_root_system(Family::C, 3);
    const auto seed = subsystem_from_roots(c3, {ExactVector::from_integers({1, -1, 0}), ExactVector::from_integers({1, 1, 0})});
    const auto closed = r_closure(c3, seed);
    CHECK(closed.positive_count() == 4);
    CHECK(identify_type(c3, closed).label() == "C2");
    CHECK(closed.contains_positive(*c3.find(ExactVector::from_integers({2, 0, 0}))));
    CHECK_THROWS_AS(subsystem_from_roots(c3, {ExactVector::from_integers({1, 0, 0})}), std::invalid_argument);
  }

  TEST_CASE("closure is idempotent, closed and contains its seed") {
    std::mt19937_64 rng(2024);
    for (auto [f, r] : {std::pair{Family::E, 6}, std::pair{Family::F, 4}, std::pair{Family::BC, 2}, std::pair{Family::G, 2}}) {
      const auto rs = build_root_system(f, r);
      for (int i = 0; i < 200; ++i) {
        const auto seed = random_seed(rs, rng);
        const auto c = r_closure(rs, seed);
        CHECK(seed.positive.subset_of(c.positive));
        CHECK(r_closure(rs, c) == c);
        CHECK(is_r_closed(rs, c));
        CHECK(span_rank(rs, c) == span_rank(rs, seed));
      }
    }
  }

  TEST_CASE("full systems identify as themselves") {
    for (auto [f, r] : {std::pair{Family::A, 3}, std::pair{Family::B, 3}, std::pair{Family::C, 3}, std::pair{Family::D, 5},
                        std::pair{Family::G, 2}, std::pair{Family::F, 4}, std::pair{Family::E, 6}, std::pair{Family::E, 7},
                        std::pair{Family::E, 8}, std::pair{Family::BC, 1}, std::pair{Family::BC, 3}}) {
      const auto rs = build_root_system(f, r);
      Subsystem all{rs.all_positive()};
      CHECK(identify_type(rs, all) == rs.lie_type());
      CHECK(simple_roots_of(rs, all).size() == static_cast<std::size_t>(r));
    }
  }

  TEST_CASE("C3 catalogue") {
    const auto rs = build_root_system(Family::C, 3);
    CHECK(labels(annihilator_catalog(rs)) == std::vector<std::string>{"regular", "A1", "C1", "A1xC1", "A2", "C2"});
    std::set<std::string> corank1;
    for (const auto& a : corank_one_closed(rs)) corank1.insert(a.label);
    CHECK(corank1 == std::set<std::string>{"C2", "A2", "A1xC1"});
  }

  TEST_CASE("BC catalogues") {
    const auto bc2 = build_root_system(Family::BC, 2);
    CHECK(labels(annihilator_catalog(bc2)) == std::vector<std::string>{"regular", "A1", "BC1"});
    const auto bc1 = build_root_system(Family::BC, 1);
    CHECK(labels(annihilator_catalog(bc1)) == std::vector<std::string>{"regular"});
    CHECK(labels(corank_one_closed(bc1)) == std::vector<std::string>{"regular"});
  }

  TEST_CASE("G2 and F4 distinguish short-root factors") {
    const auto g2 = build_root_system(Family::G, 2);
    CHECK(labels(annihilator_catalog(g2)) == std::vector<std::string>{"regular", "A1", "~A1"});
    const auto f4 = build_root_system(Family::F, 4);
    std::set<std::string> corank1;
    for (const auto& a : corank_one_closed(f4)) corank1.insert(a.label);
    CHECK(corank1 == std::set<std::string>{"B3", "C3", "A1x~A2", "~A1xA2"});
    CHECK(annihilator_catalog(f4).size() == 11);
  }

  TEST_CASE("exceptional catalogue sizes") {
    const auto e6 = annihilator_catalog(build_root_system(Family::E, 6));
    CHECK(e6.size() == 16);
    CHECK_NOTHROW(find_annihilator(e6, "D5"));
    CHECK_NOTHROW(find_annihilator(e6, "A5"));
    const auto e7 = build_root_system(Family::E, 7);
    const auto c7 = annihilator_catalog(e7);
    CHECK(c7.size() == 31);
    CHECK(find_annihilator(c7, "A5'").lie_type.label() == "A5");
    CHECK(find_annihilator(c7, "A5''").lie_type.label() == "A5");
    CHECK_THROWS_AS(find_annihilator(c7, "A5"), std::invalid_argument);
    CHECK_FALSE(are_conjugate(e7, find_annihilator(c7, "A5'").representative,
                              find_annihilator(c7, "A5''").representative));
    CHECK(annihilator_catalog(build_root_system(Family::E, 8)).size() == 40);
    CHECK(corank_one_closed(build_root_system(Family::E, 8)).size() == 8);
  }

  TEST_CASE("annihilator lookup") {
    const auto cat = annihilator_catalog(build_root_system(Family::C, 3));
    CHECK(find_annihilator(cat, "C1xA1").label == "A1xC1");
    CHECK(find_annihilator(cat, "regular").lie_type.empty());
    CHECK_THROWS_AS(find_annihilator(cat, "D5"), std::invalid_argument);
    CHECK_THROWS_AS(find_annihilator(cat, "C2x"), std::invalid_argument);
  }

  TEST_CASE("elementary moves agree with orbit conjugacy on E6") {
    const auto rs = build_root_system(Family::E, 6);
    const auto classes = base_subset_classes(rs);
    std::map<BaseSubset, std::size_t> class_of;
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (auto j : classes[c]) class_of[j] = c;
    REQUIRE(class_of.size() == 64);
    const WeylAction action(rs);
    for (BaseSubset j = 0; j < 64; ++j) {
      const auto orbit = action.orbit(parabolic_subsystem(rs, j));
      for (BaseSubset k = 0; k < 64; ++k)
        CHECK((class_of[j] == class_of[k]) == orbit.contains(parabolic_subsystem(rs, k)));
    }
  }

  TEST_CASE("flat enumeration of E6 closed subsystems") {
    const auto rs = build_root_system(Family::E, 6);
    const auto group = oracle::weyl_elements(rs);
    REQUIRE(group.size() == 51840);
    // Orbits of every parabolic subsystem, listed element by element.
    std::map<PosMask, std::size_t> orbit_id;
    std::size_t next = 0;
    for (BaseSubset j = 0; j < 64; ++j) {
      const auto seed = parabolic_subsystem(rs, j).positive;
      if (orbit_id.count(seed)) continue;
      for (const auto& w : group) orbit_id.emplace(oracle::image(rs, w, seed), next);
      ++next;
    }
    CHECK(next == 17);  // sixteen proper classes plus E6 itself
    // Random closed subsystems all fall into one of those orbits.
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) CHECK(orbit_id.count(r_closure(rs, random_seed(rs, rng)).positive) == 1);
    // The catalogue has one representative per proper class.
    std::set<std::size_t> seen;
    for (const auto& a : annihilator_catalog(rs)) seen.insert(orbit_id.at(a.representative.positive));
    CHECK(seen.size() == 16);
  }

  TEST_CASE("weighted subsystem dimensions") {
    auto c3 = attach_multiplicities(build_root_system(Family::C, 3), {std::nullopt, {{RootClass::Short, 8}, {RootClass::Long, 1}}});
    const auto cat = annihilator_catalog(c3);
    CHECK(find_annihilator(cat, "C2").dim == 18);
    CHECK(find_annihilator(cat, "A1xC1").dim == 9);
    CHECK(find_annihilator(cat, "A2").dim == 24);
    CHECK(find_annihilator(cat, "regular").dim == 0);
  }
}
