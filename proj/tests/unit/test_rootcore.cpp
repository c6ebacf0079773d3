#include "excsym/rootcore.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace excsym;

namespace {

struct Shape {
  Family family;
  int rank;
  std::size_t roots;
  std::size_t positive;
};

const Shape kShapes[] = {
    {Family::A, 1, 2, 1},    {Family::A, 2, 6, 3},    {Family::B, 2, 8, 4},    {Family::C, 3, 18, 9},
    {Family::D, 4, 24, 12},  {Family::G, 2, 12, 6},   {Family::F, 4, 48, 24},  {Family::E, 6, 72, 36},
    {Family::E, 7, 126, 63}, {Family::E, 8, 240, 120}, {Family::BC, 1, 4, 2},  {Family::BC, 2, 12, 6},
};

}  // namespace

TEST_SUITE("rootcore") {
  TEST_CASE("root counts match the closed formulas") {
    for (const auto& s : kShapes) {
      CAPTURE(family_name(s.family));
      CAPTURE(s.rank);
      const auto rs = build_root_system(s.family, s.rank);
      CHECK(rs.num_roots() == s.roots);
      CHECK(rs.num_positive() == s.positive);
      CHECK(rs.base().size() == static_cast<std::size_t>(s.rank));
    }
  }

  TEST_CASE("every system is closed under its own reflections") {
    for (const auto& s : kShapes) {
      const auto rs = build_root_system(s.family, s.rank);
      const auto roots = oracle::root_set(rs);
      for (const auto& a : roots)
        for (const auto& b : roots) REQUIRE(roots.count(oracle::reflect(a, b)) == 1);
    }
  }

  TEST_CASE("reduced systems are the reflection orbit of their base") {
    for (const auto& s : kShapes) {
      const auto rs = build_root_system(s.family, s.rank);
      CHECK(oracle::reflection_closure_of_base(rs, !rs.reduced()) == oracle::root_set(rs));
    }
  }

  TEST_CASE("BC systems add the doubled short roots") {
    const auto rs = build_root_system(Family::BC, 2);
    CHECK_FALSE(rs.reduced());
    int divisible = 0;
    for (std::size_t p = 0; p < rs.num_positive(); ++p) divisible += rs.root_class(p) == RootClass::Divisible;
    CHECK(divisible == 2);
    CHECK(rs.find(ExactVector::from_integers({2, 0})).has_value());
    CHECK(rs.find(ExactVector::from_integers({1, 0})).has_value());
  }

  TEST_CASE("positive roots have sign-coherent integral base coefficients") {
    for (const auto& s : kShapes) {
      const auto rs = build_root_system(s.family, s.rank);
      for (std::size_t i = 0; i < rs.num_roots(); ++i) {
        int sign = 0;
        for (std::size_t j = 0; j < rs.base().size(); ++j) {
          const int c = rs.coefficient(i, j);
          if (c != 0) {
            if (sign == 0) sign = c > 0 ? 1 : -1;
            REQUIRE(sign * c > 0);
          }
        }
        CHECK(rs.is_positive(i) == (sign > 0));
      }
    }
  }

  TEST_CASE("simple roots come first and negation is an involution") {
    const auto rs = build_root_system(Family::E, 8);
    for (std::size_t j = 0; j < 8; ++j) {
      CHECK(rs.base()[j] == j);
      CHECK(rs.height(j) == 1);
    }
    for (std::size_t i = 0; i < rs.num_roots(); ++i) {
      CHECK(rs.negate(rs.negate(i)) == i);
      CHECK(rs.root(rs.negate(i)) == -rs.root(i));
    }
  }

  TEST_CASE("weighted dimensions") {
    auto bc2 = attach_multiplicities(build_root_system(Family::BC, 2),
                                     {std::nullopt, {{RootClass::Short, 8}, {RootClass::Long, 6}, {RootClass::Divisible, 1}}});
    CHECK(bc2.dimension() == 30);
    auto c3 = attach_multiplicities(build_root_system(Family::C, 3),
                                    {std::nullopt, {{RootClass::Short, 8}, {RootClass::Long, 1}}});
    CHECK(c3.dimension() == 51);
    CHECK(build_root_system(Family::E, 6).dimension() == 36);
  }

  TEST_CASE("multiplicity patterns are validated") {
    const auto g2 = build_root_system(Family::G, 2);
    CHECK_THROWS_AS(attach_multiplicities(g2, {std::nullopt, {{RootClass::Divisible, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(attach_multiplicities(g2, {std::nullopt, {{RootClass::Short, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(attach_multiplicities(g2, MultiplicityPattern::all(0)), std::invalid_argument);
  }

  TEST_CASE("invalid systems are rejected") {
    CHECK_THROWS_AS(build_root_system(Family::E, 9), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(Family::D, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(Family::F, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(Family::A, 0), std::invalid_argument);
  }

  TEST_CASE("type labels round-trip") {
    for (const char* s : {"A1", "A1xC1", "BC1", "D5", "~A1xA2", "E7"}) CHECK(LieType::parse(s).label() == s);
    CHECK(LieType::parse("regular").empty());
    CHECK(LieType::parse("C1xA1") == LieType::parse("A1xC1"));
    CHECK_THROWS_AS(LieType::parse("Q3"), std::invalid_argument);
    CHECK_THROWS_AS(LieType::parse("A"), std::invalid_argument);
    CHECK_THROWS_AS(LieType::parse("A1x"), std::invalid_argument);
    CHECK_THROWS_AS(LieType::parse("E9"), std::invalid_argument);
  }

  TEST_CASE("reflections and base coefficients") {
    const auto rs = build_root_system(Family::A, 2);
    const auto a0 = rs.root(0);
    CHECK(reflect(rs, 0, a0) == -a0);
    CHECK(inner4(rs.root(0), rs.root(1)) == -4);
    CHECK_THROWS_AS(base_coefficient_nonzero(rs, rs.negate(0), 0), std::invalid_argument);
    CHECK(base_coefficient_nonzero(rs, 2, 0));
  }
}
