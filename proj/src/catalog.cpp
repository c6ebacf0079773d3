#include "excsym/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace excsym {

namespace {

MultiplicityPattern by_class(std::map<RootClass, int> m) { return {std::nullopt, std::move(m)}; }

SpaceDescriptor row(std::string label, const char* absolute, const char* restricted, int rank, int dim_gk,
                    std::optional<MultiplicityPattern> pattern, std::vector<const char*> exceptions,
                    LgProvenance provenance) {
  SpaceDescriptor d;
  d.cartan_label = std::move(label);
  d.absolute_type = LieType::parse(absolute);
  d.restricted_type = LieType::parse(restricted);
  d.rank = rank;
  d.dim_gk = dim_gk;
  d.multiplicity_pattern = std::move(pattern);
  for (const char* e : exceptions) d.paper_lx_exceptions.push_back(LieType::parse(e));
  d.paper_lg = d.paper_lx_exceptions.empty() ? 2 : 3;
  d.lg_provenance = provenance;
  return d;
}

std::vector<SpaceDescriptor> build_table() {
  using RC = RootClass;
  const auto all1 = MultiplicityPattern::all(1);
  std::vector<SpaceDescriptor> t;
  t.push_back(row("EI", "E6", "E6", 6, 42, all1, {"D5", "A5"}, LgProvenance::Wright));
  t.push_back(row("EII", "E6", "F4", 4, 40, std::nullopt, {}, LgProvenance::Embedding));
  // BC2: e_i +- e_j are the long indivisible roots, e_i short, 2e_i divisible.
  t.push_back(row("EIII", "E6", "BC2", 2, 32, by_class({{RC::Short, 8}, {RC::Long, 6}, {RC::Divisible, 1}}), {},
                  LgProvenance::Wright));
  t.push_back(row("EIV", "E6", "A2", 2, 26, MultiplicityPattern::all(8), {"A1"}, LgProvenance::Wright));
  t.push_back(row("EV", "E7", "E7", 7, 70, all1, {"E6", "D6"}, LgProvenance::Wright));
  t.push_back(row("EVI", "E7", "F4", 4, 64, std::nullopt, {}, LgProvenance::Embedding));
  // C3: e_i +- e_j short, 2e_i long.
  t.push_back(row("EVII", "E7", "C3", 3, 54, by_class({{RC::Short, 8}, {RC::Long, 1}}), {"C2"},
                  LgProvenance::Wright));
  t.push_back(row("EVIII", "E8", "E8", 8, 128, all1, {"E7"}, LgProvenance::Wright));
  t.push_back(row("EIX", "E8", "F4", 4, 112, std::nullopt, {}, LgProvenance::Embedding));
  t.push_back(row("FI", "F4", "F4", 4, 28, all1, {}, LgProvenance::Wright));
  t.push_back(row("FII", "F4", "BC1", 1, 16, by_class({{RC::Short, 8}, {RC::Divisible, 7}}), {},
                  LgProvenance::Regularity));
  t.push_back(row("G", "G2", "G2", 2, 8, all1, {}, LgProvenance::Wright));
  return t;
}

void check_table(const std::vector<SpaceDescriptor>& table) {
  const std::set<std::string> lg3{"EI", "EIV", "EV", "EVII", "EVIII"};
  for (const auto& d : table) {
    auto fail = [&](const std::string& why) {
      throw std::logic_error("catalog row " + d.cartan_label + ": " + why);
    };
    if (d.restricted_type.rank() != d.rank) fail("restricted type rank differs from rank column");
    if ((d.paper_lg == 3) != (lg3.count(d.cartan_label) == 1)) fail("L(G) inconsistent");
    if (d.multiplicities_known()) {
      const RootSystem rs = d.root_system();
      if (rs.dimension() + d.rank != d.dim_gk) fail("multiplicities do not add up to dim G/K");
    } else if (d.lg_provenance != LgProvenance::Embedding) {
      fail("missing multiplicities without embedding provenance");
    }
  }
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view lg_provenance_name(LgProvenance p) {
  switch (p) {
    case LgProvenance::Wright: return "WRIGHT";
    case LgProvenance::Embedding: return "EMBEDDING";
    case LgProvenance::Regularity: return "REGULARITY";
  }
  return "?";
}

int SpaceDescriptor::paper_lx(const LieType& annihilator) const {
  const bool exceptional = std::find(paper_lx_exceptions.begin(), paper_lx_exceptions.end(), annihilator) !=
                           paper_lx_exceptions.end();
  return exceptional ? 3 : 2;
}

RootSystem SpaceDescriptor::root_system() const {
  if (!multiplicity_pattern)
    throw std::logic_error("multiplicities of " + cartan_label + " are not available");
  const auto& f = restricted_type.factors().front();
  return attach_multiplicities(build_root_system(f.family, f.rank), *multiplicity_pattern);
}

std::string SpaceDescriptor::multiplicity_text() const {
  if (!multiplicity_pattern) return "unavailable";
  if (multiplicity_pattern->uniform) return "all: " + std::to_string(*multiplicity_pattern->uniform);
  std::string out;
  for (const auto& [cls, m] : multiplicity_pattern->by_class) {
    if (!out.empty()) out += ", ";
    out += std::string(root_class_name(cls)) + ": " + std::to_string(m);
  }
  return out;
}

const std::vector<SpaceDescriptor>& list_spaces() {
  static const std::vector<SpaceDescriptor> table = [] {
    auto t = build_table();
    check_table(t);
    return t;
  }();
  return table;
}

const SpaceDescriptor& get_space(std::string_view label) {
  const std::string key = upper(label);
  for (const auto& d : list_spaces())
    if (d.cartan_label == key) return d;
  throw std::invalid_argument("unknown symmetric space '" + std::string(label) + "'");
}

}  // namespace excsym
