#include "excsym/catalog.hpp"

#include <doctest.h>

#include <set>

using namespace excsym;

TEST_SUITE("catalog") {
  TEST_CASE("twelve spaces in table order") {
    std::vector<std::string> labels;
    for (const auto& d : list_spaces()) labels.push_back(d.cartan_label);
    CHECK(labels == std::vector<std::string>{"EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX", "FI", "FII", "G"});
  }

  TEST_CASE("published table values") {
    std::set<std::string> lg3;
    for (const auto& d : list_spaces())
      if (d.paper_lg == 3) lg3.insert(d.cartan_label);
    CHECK(lg3 == std::set<std::string>{"EI", "EIV", "EV", "EVII", "EVIII"});

    CHECK(get_space("EI").paper_lx(LieType::parse("D5")) == 3);
    CHECK(get_space("EI").paper_lx(LieType::parse("A5")) == 3);
    CHECK(get_space("EI").paper_lx(LieType::parse("A4")) == 2);
    CHECK(get_space("EV").paper_lx(LieType::parse("E6")) == 3);
    CHECK(get_space("EV").paper_lx(LieType::parse("D6")) == 3);
    CHECK(get_space("EVII").paper_lx(LieType::parse("C2")) == 3);
    CHECK(get_space("EVII").paper_lx(LieType::parse("A2")) == 2);
    CHECK(get_space("EVIII").paper_lx(LieType::parse("E7")) == 3);
    CHECK(get_space("EIV").paper_lx(LieType::parse("A1")) == 3);
    CHECK(get_space("G").paper_lx(LieType::parse("A1")) == 2);
  }

  TEST_CASE("spaces without multiplicities") {
    std::set<std::string> unknown;
    for (const auto& d : list_spaces())
      if (!d.multiplicities_known()) {
        unknown.insert(d.cartan_label);
        CHECK(d.lg_provenance == LgProvenance::Embedding);
        CHECK_THROWS_AS(d.root_system(), std::logic_error);
      }
    CHECK(unknown == std::set<std::string>{"EII", "EVI", "EIX"});
    CHECK(get_space("FII").lg_provenance == LgProvenance::Regularity);
    CHECK(lg_provenance_name(LgProvenance::Wright) == "WRIGHT");
  }

  TEST_CASE("dimensions add up") {
    for (const auto& d : list_spaces()) {
      CHECK(d.restricted_type.rank() == d.rank);
      if (!d.multiplicities_known()) continue;
      const auto rs = d.root_system();
      CHECK(rs.dimension() + d.rank == d.dim_gk);
      CHECK(rs.lie_type() == d.restricted_type);
    }
    CHECK(get_space("EVII").root_system().dimension() == 51);
    CHECK(get_space("EIII").root_system().dimension() == 30);
    CHECK(get_space("EVIII").dim_gk == 128);
  }

  TEST_CASE("lookup") {
    CHECK(get_space("evii").cartan_label == "EVII");
    CHECK_THROWS_AS(get_space("EX"), std::invalid_argument);
    CHECK(get_space("EVII").multiplicity_text() == "short: 8, long: 1");
    CHECK(get_space("FI").multiplicity_text() == "all: 1");
  }
}
