#include "excsym/classify.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace excsym;

namespace {

const ClassificationRecord& record(const SpaceClassification& s, const std::string& label) {
  for (const auto& r : s.records)
    if (r.annihilator == label) return r;
  throw std::out_of_range(label);
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("EIII is exact everywhere") {
    const auto s = classify_space("EIII");
    REQUIRE(s.records.size() == 3);
    for (const auto& r : s.records) {
      CHECK(r.status == RecordStatus::ExactMatch);
      CHECK(r.lower == 2);
      CHECK(r.upper == 2);
    }
    REQUIRE(s.lg);
    CHECK(s.lg->holds);
  }

  TEST_CASE("EIV") {
    const auto s = classify_space("EIV");
    REQUIRE(s.records.size() == 2);
    const auto& a1 = record(s, "A1");
    CHECK(a1.upper == 3);
    CHECK(a1.lower == 3);
    CHECK(a1.lower_method == LowerMethod::Witness);
    CHECK(a1.singular_m == 2);
    REQUIRE(a1.witness);
    CHECK(verify_witness(get_space("EIV").root_system(), *a1.witness));
    CHECK(a1.status == RecordStatus::ExactMatch);
    CHECK(record(s, "regular").upper == 2);
  }

  TEST_CASE("EI") {
    const auto s = classify_space("EI");
    CHECK(s.records.size() == 16);
    const auto& d5 = record(s, "D5");
    CHECK(d5.lower_method == LowerMethod::Dimension);
    CHECK(d5.status == RecordStatus::ExactMatch);
    const auto& a5 = record(s, "A5");
    CHECK(a5.lower == 3);
    CHECK(a5.upper == 3);
    CHECK(a5.lower_method == LowerMethod::Witness);
    CHECK(a5.status == RecordStatus::ExactMatch);
    for (const auto& r : s.records) CHECK(r.reduced_agrees.value_or(true));
  }

  TEST_CASE("EVII") {
    const auto s = classify_space("EVII");
    REQUIRE(s.records.size() == 6);
    const auto& a2 = record(s, "A2");
    CHECK(a2.status == RecordStatus::ContainsPaper);
    CHECK(a2.lower == 2);
    CHECK(a2.upper == 3);
    CHECK(a2.published_value == 2);
    CHECK(a2.undecided_m == std::vector<int>{2});
    const auto& c2 = record(s, "C2");
    CHECK(c2.status == RecordStatus::ExactMatch);
    CHECK(c2.lower_method == LowerMethod::Witness);
  }

  TEST_CASE("reference rows") {
    const auto s = classify_space("EIX");
    REQUIRE(s.records.size() == 1);
    CHECK(s.records[0].status == RecordStatus::Reference);
    CHECK(s.records[0].annihilator == "any");
    CHECK_FALSE(s.lg.has_value());
    CHECK_FALSE(verify_lg("EII").has_value());
  }

  TEST_CASE("L(G) checks") {
    for (const char* label : {"G", "EV", "EVII", "FI", "EIV"}) {
      const auto v = verify_lg(label);
      REQUIRE(v);
      CHECK(v->holds);
      CHECK(v->m == get_space(label).paper_lg);
      CHECK(v->worst_slack >= 0);
      CHECK(v->tuples_checked > 0);
    }
    // One fewer measure does not suffice where the published L(G) is 3.
    Engine e(get_space("EV").root_system());
    CHECK_FALSE(verify_lg(e, 2).holds);
  }

  TEST_CASE("rendering") {
    const std::vector<SpaceClassification> spaces{classify_space("G"), classify_space("EIX")};
    const auto j = nlohmann::json::parse(render_classifications(spaces, ReportFormat::Json));
    CHECK(j["schema"] == "excsym.report");
    CHECK(j["spaces"].size() == 2);
    CHECK(j["summary"]["REFERENCE"] == 1);
    CHECK(j["summary"]["consistent"] == true);
    CHECK(j["spaces"][0]["records"][0]["published_value"] == 2);

    const auto csv = render_classifications(spaces, ReportFormat::Csv);
    CHECK(csv.rfind("space,annihilator,dim_phix,dim_nx,lower,upper,published_value,status", 0) == 0);
    CHECK(render_classifications(spaces, ReportFormat::Markdown).find("## G (restricted G2") != std::string::npos);
    CHECK(parse_report_format("md") == ReportFormat::Markdown);
    CHECK_THROWS_AS(parse_report_format("yaml"), std::invalid_argument);
    CHECK(all_records_consistent(spaces));
  }
}
