#include "excsym/cli.hpp"

#include "excsym/classify.hpp"
#include "excsym/kernels.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace excsym::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kCatalogSchemaVersion = 1;
constexpr int kResultSchemaVersion = 1;

struct Settings {
  std::string format = "text";
  unsigned jobs = 0;
  std::size_t ceiling = kDefaultOrbitCeiling;
  std::string cache_dir;
  bool no_cache = false;
  std::string output;
  std::string target;
  std::vector<std::string> annihilators;
  int m = 0;
  std::string multiplicities;
  bool reduced = false;
  std::string side = "auto";
  bool weighted = false;
};

/// Usage problems detected after flag parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_table(const Table& t, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::Csv) {
    for (std::size_t i = 0; i < t.headers.size(); ++i) os << (i ? "," : "") << csv_field(t.headers[i]);
    os << '\n';
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
      os << '\n';
    }
  } else if (format == ReportFormat::Markdown) {
    os << '|';
    for (const auto& h : t.headers) os << ' ' << h << " |";
    os << "\n|";
    for (std::size_t i = 0; i < t.headers.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& r : t.rows) {
      os << '|';
      for (const auto& c : r) os << ' ' << c << " |";
      os << '\n';
    }
  } else {
    std::vector<std::size_t> width(t.headers.size());
    for (std::size_t i = 0; i < t.headers.size(); ++i) width[i] = t.headers[i].size();
    for (const auto& r : t.rows)
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        std::string c = cells[i];
        if (i + 1 < cells.size()) c.resize(width[i] + 2, ' ');
        s += c;
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      os << s << '\n';
    };
    line(t.headers);
    for (const auto& r : t.rows) line(r);
  }
  return os.str();
}

/// key/value preamble followed by a table; csv carries the table only.
std::string render_document(const std::vector<std::pair<std::string, std::string>>& fields, const Table* table,
                            ReportFormat format) {
  std::ostringstream os;
  if (format != ReportFormat::Csv) {
    for (const auto& [k, v] : fields) os << (format == ReportFormat::Markdown ? "- **" + k + "**: " : k + ": ") << v << '\n';
    if (table) os << '\n';
  }
  if (table) os << render_table(*table, format);
  return os.str();
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? std::string(sep) : "") + parts[i];
  return out;
}

MultiplicityPattern parse_multiplicities(const std::string& text) {
  MultiplicityPattern p;
  if (text.empty()) return MultiplicityPattern::all(1);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("multiplicity entry '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("multiplicity value in '" + item + "' is not an integer");
    }
    if (key == "all") {
      p.uniform = value;
    } else if (auto cls = parse_root_class(key)) {
      p.by_class[*cls] = value;
    } else {
      throw UsageError("unknown root class '" + key + "' (short, long, divisible, all)");
    }
  }
  return p;
}

struct Target {
  std::string name;
  std::string description;
  const SpaceDescriptor* space = nullptr;
  std::unique_ptr<Engine> engine;
};

Target resolve_target(const Settings& s, const EngineOptions& eo, std::shared_ptr<OrbitCache> cache) {
  Target t;
  t.name = s.target;
  const SpaceDescriptor* space = nullptr;
  try {
    space = &get_space(s.target);
  } catch (const std::invalid_argument&) {
  }
  if (space) {
    if (!s.multiplicities.empty()) throw UsageError("--mult applies to bare root systems, not to spaces");
    if (!space->multiplicities_known())
      throw UsageError("multiplicities of " + space->cartan_label + " are not available; pass the restricted root system " +
                       space->restricted_type.label() + " to work with multiplicity one");
    t.space = space;
    t.name = space->cartan_label;
    t.description = space->restricted_type.label() + ", " + space->multiplicity_text();
    t.engine = std::make_unique<Engine>(space->root_system(), eo, std::move(cache));
    return t;
  }
  LieType type;
  try {
    type = LieType::parse(s.target);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown space or root system '" + s.target + "'");
  }
  if (type.factors().size() != 1 || type.factors().front().short_roots)
    throw UsageError("target must be a space label or an irreducible root system such as C3");
  const auto& f = type.factors().front();
  RootSystem rs;
  try {
    rs = attach_multiplicities(build_root_system(f.family, f.rank), parse_multiplicities(s.multiplicities));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  t.description = type.label() + (s.multiplicities.empty() ? ", all: 1" : ", " + s.multiplicities);
  t.engine = std::make_unique<Engine>(std::move(rs), eo, std::move(cache));
  return t;
}

std::vector<const AnnihilatorType*> resolve_annihilators(const Engine& e, const Settings& s) {
  if (s.annihilators.empty()) throw UsageError("at least one --annihilator is required");
  std::vector<const AnnihilatorType*> out;
  for (const auto& label : s.annihilators) {
    try {
      out.push_back(&find_annihilator(e.catalog(), label));
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
  }
  if (out.size() == 1) {
    const int m = s.m ? s.m : 2;
    out.assign(static_cast<std::size_t>(m), out.front());
  } else if (s.m && s.m != static_cast<int>(out.size())) {
    throw UsageError("--m disagrees with the number of --annihilator options");
  }
  return out;
}

std::vector<std::string> labels_of(const std::vector<const AnnihilatorType*>& as) {
  std::vector<std::string> out;
  for (auto* a : as) out.push_back(a->label);
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands. Each returns the exit code and writes data to `out`.

int cmd_spaces(ReportFormat format, std::ostream& out) {
  const auto& spaces = list_spaces();
  if (format == ReportFormat::Json) {
    Json doc;
    doc["schema"] = "excsym.catalog";
    doc["schema_version"] = kCatalogSchemaVersion;
    Json arr = Json::array();
    for (const auto& d : spaces) {
      Json j;
      j["cartan_label"] = d.cartan_label;
      j["absolute_type"] = d.absolute_type.label();
      j["restricted_type"] = d.restricted_type.label();
      j["rank"] = d.rank;
      j["dim_gk"] = d.dim_gk;
      if (d.multiplicity_pattern) {
        Json m;
        if (d.multiplicity_pattern->uniform) m["all"] = *d.multiplicity_pattern->uniform;
        for (const auto& [cls, v] : d.multiplicity_pattern->by_class) m[std::string(root_class_name(cls))] = v;
        j["multiplicities"] = std::move(m);
      } else {
        j["multiplicities"] = nullptr;
      }
      Json ex = Json::object();
      for (const auto& t : d.paper_lx_exceptions) ex[t.label()] = 3;
      j["lx_exceptions"] = std::move(ex);
      j["lg"] = d.paper_lg;
      j["lg_provenance"] = lg_provenance_name(d.lg_provenance);
      arr.push_back(std::move(j));
    }
    doc["spaces"] = std::move(arr);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  Table t{{"space", "absolute", "restricted", "rank", "dim", "multiplicities", "L_X=3 for", "L(G)", "provenance"}, {}};
  for (const auto& d : spaces) {
    std::vector<std::string> ex;
    for (const auto& e : d.paper_lx_exceptions) ex.push_back(e.label());
    t.rows.push_back({d.cartan_label, d.absolute_type.label(), d.restricted_type.label(), std::to_string(d.rank),
                      std::to_string(d.dim_gk), d.multiplicity_text(), ex.empty() ? "-" : join(ex, " "),
                      std::to_string(d.paper_lg), std::string(lg_provenance_name(d.lg_provenance))});
  }
  out << render_table(t, format);
  return kExitOk;
}

int cmd_classify(const Settings& s, const ClassifyOptions& co, ReportFormat format, std::ostream& out) {
  const SpaceDescriptor* space = nullptr;
  try {
    space = &get_space(s.target);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<SpaceClassification> result{classify_space(space->cartan_label, co)};
  out << render_classifications(result, format);
  return all_records_consistent(result) ? kExitOk : kExitFailure;
}

int cmd_report(const ClassifyOptions& co, ReportFormat format, std::ostream& out) {
  const auto result = classify_all(co);
  out << render_classifications(result, format);
  return all_records_consistent(result) ? kExitOk : kExitFailure;
}

int cmd_wright(const Settings& s, Target& t, ReportFormat format, std::ostream& out) {
  const auto& e = *t.engine;
  const auto as = resolve_annihilators(e, s);
  std::vector<Subsystem> tuple;
  for (auto* a : as) tuple.push_back(a->representative);
  const auto report = wright_tuple(e, tuple);
  std::optional<ReducedReport> reduced;
  if (s.reduced) {
    if (std::any_of(as.begin(), as.end(), [&](auto* a) { return a != as.front(); }))
      throw UsageError("--reduced needs a single annihilator");
    try {
      reduced = wright_reduced(e, tuple.front(), report.m);
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
  }

  if (format == ReportFormat::Json) {
    Json j;
    j["schema"] = "excsym.wright";
    j["schema_version"] = kResultSchemaVersion;
    j["target"] = t.name;
    j["annihilators"] = labels_of(as);
    j["m"] = report.m;
    j["holds"] = report.holds;
    j["slack"] = report.slack;
    j["binding_psi"] = report.binding_psi;
    Json terms = Json::array();
    for (const auto& term : report.terms) {
      Json x;
      x["psi"] = term.psi_label;
      x["dim_psi"] = term.dim_psi;
      x["min_intersections"] = term.min_intersections;
      x["lhs"] = term.lhs;
      x["rhs"] = term.rhs;
      x["slack"] = term.slack;
      terms.push_back(std::move(x));
    }
    j["terms"] = std::move(terms);
    if (reduced) {
      Json r;
      r["holds"] = reduced->holds;
      r["slack"] = reduced->slack;
      r["binding_position"] = reduced->binding_position;
      j["reduced"] = std::move(r);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  std::vector<std::pair<std::string, std::string>> fields{
      {"target", t.name + " (" + t.description + ")"},
      {"annihilators", join(labels_of(as), ", ")},
      {"m", std::to_string(report.m)},
      {"holds", report.holds ? "true" : "false"},
      {"slack", std::to_string(report.slack)},
      {"binding_psi", report.binding_psi},
  };
  if (reduced) {
    fields.emplace_back("reduced_holds", reduced->holds ? "true" : "false");
    fields.emplace_back("reduced_slack", std::to_string(reduced->slack));
  }
  Table table{{"psi", "dim_psi", "min_intersections", "lhs", "rhs", "slack"}, {}};
  for (const auto& term : report.terms) {
    std::vector<std::string> mins;
    for (int v : term.min_intersections) mins.push_back(std::to_string(v));
    table.rows.push_back({term.psi_label, std::to_string(term.dim_psi), join(mins, " "), std::to_string(term.lhs),
                          std::to_string(term.rhs), std::to_string(term.slack)});
  }
  out << render_document(fields, &table, format);
  return kExitOk;
}

int cmd_witness(const Settings& s, Target& t, ReportFormat format, std::ostream& out) {
  const auto& e = *t.engine;
  const auto& rs = e.system();
  const auto as = resolve_annihilators(e, s);
  std::vector<Subsystem> tuple;
  for (auto* a : as) tuple.push_back(a->representative);
  const auto w = witness_search(e, tuple);
  const auto mode = s.weighted ? DisjointnessMode::WeightedRootSpaces : DisjointnessMode::RootSets;
  const bool verified = w && verify_witness(rs, *w, mode);

  if (format == ReportFormat::Json) {
    Json j;
    j["schema"] = "excsym.witness";
    j["schema_version"] = kResultSchemaVersion;
    j["target"] = t.name;
    j["annihilators"] = labels_of(as);
    j["m"] = static_cast<int>(as.size());
    j["found"] = w.has_value();
    if (w) {
      j["verified"] = verified;
      j["psi"] = root_strings(rs, w->psi.positive);
      Json conj = Json::array(), sets = Json::array();
      for (const auto& a : w->conjugated_annihilators) conj.push_back(root_strings(rs, a.positive));
      for (const auto& x : w->intersection_sets) sets.push_back(root_strings(rs, x));
      j["conjugated_annihilators"] = std::move(conj);
      j["intersection_sets"] = std::move(sets);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  std::vector<std::pair<std::string, std::string>> fields{
      {"target", t.name + " (" + t.description + ")"},
      {"annihilators", join(labels_of(as), ", ")},
      {"m", std::to_string(as.size())},
      {"found", w ? "true" : "false"},
  };
  if (!w) {
    out << render_document(fields, nullptr, format);
    return kExitOk;
  }
  fields.emplace_back("verified", verified ? "true" : "false");
  fields.emplace_back("psi", join(root_strings(rs, w->psi.positive), " "));
  Table table{{"slot", "conjugated_annihilator", "intersection_set"}, {}};
  for (std::size_t k = 0; k < w->conjugated_annihilators.size(); ++k)
    table.rows.push_back({std::to_string(k + 1), join(root_strings(rs, w->conjugated_annihilators[k].positive), " "),
                          join(root_strings(rs, w->intersection_sets[k]), " ")});
  out << render_document(fields, &table, format);
  return kExitOk;
}

int cmd_orbit(const Settings& s, Target& t, ReportFormat format, std::ostream& out) {
  const auto& e = *t.engine;
  if (s.annihilators.size() != 1) throw UsageError("orbit takes exactly one --annihilator");
  const AnnihilatorType* a = nullptr;
  try {
    a = &find_annihilator(e.catalog(), s.annihilators.front());
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  const auto orbit = e.orbit(a->representative);
  const std::uint64_t order = e.weyl_order();
  const std::uint64_t size = orbit->size();
  if (format == ReportFormat::Json) {
    Json j;
    j["schema"] = "excsym.orbit";
    j["schema_version"] = kResultSchemaVersion;
    j["target"] = t.name;
    j["annihilator"] = a->label;
    j["type"] = a->lie_type.label();
    j["dim"] = a->dim;
    j["representative"] = a->representative.positive.hex();
    j["orbit_size"] = size;
    j["group_order"] = order;
    j["normalizer_order"] = order / size;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  std::vector<std::pair<std::string, std::string>> fields{
      {"target", t.name + " (" + t.description + ")"},
      {"annihilator", a->label},
      {"dim", std::to_string(a->dim)},
      {"representative", a->representative.positive.hex()},
      {"orbit_size", std::to_string(size)},
      {"group_order", std::to_string(order)},
      {"normalizer_order", std::to_string(order / size)},
  };
  if (format == ReportFormat::Csv) {
    Table table{{"target", "annihilator", "orbit_size", "group_order"},
                {{t.name, a->label, std::to_string(size), std::to_string(order)}}};
    out << render_table(table, format);
  } else {
    out << render_document(fields, nullptr, format);
  }
  return kExitOk;
}

int cmd_selftest(const ClassifyOptions& co, std::ostream& out) {
  struct Check {
    std::string name;
    std::function<bool()> run;
  };
  auto space_engine = [&](const char* label) {
    return std::make_unique<Engine>(get_space(label).root_system(), co.engine, co.cache);
  };
  std::vector<Check> checks{
      {"E8 has 240 roots", [] { return build_root_system(Family::E, 8).num_roots() == 240; }},
      {"|W(F4)| = 1152", [] { return group_order(build_root_system(Family::F, 4)) == 1152; }},
      {"EVII dim Phi = 51", [] { return get_space("EVII").root_system().dimension() == 51; }},
      {"EIV (A1, A1) fails Wright with slack -1",
       [&] {
         auto e = space_engine("EIV");
         const auto r = wright_power(*e, find_annihilator(e->catalog(), "A1").representative, 2);
         return !r.holds && r.slack == -1;
       }},
      {"EVII (C2, C2) has a verified witness",
       [&] {
         auto e = space_engine("EVII");
         const auto c2 = find_annihilator(e->catalog(), "C2").representative;
         const auto w = witness_search(*e, {c2, c2});
         return w && verify_witness(e->system(), *w);
       }},
      {"EVII L(G) = 3 verified", [&] { return verify_lg(*space_engine("EVII"), 3).holds; }},
      {"SIMD backend agrees with scalar",
       [] {
         std::vector<PosMask> batch;
         std::uint64_t x = 0x9e3779b97f4a7c15ULL;
         for (int i = 0; i < 257; ++i) {
           PosMask m;
           x ^= x << 13, x ^= x >> 7, x ^= x << 17;
           m.words[0] = x;
           x ^= x << 13, x ^= x >> 7, x ^= x << 17;
           m.words[1] = x;
           batch.push_back(m);
         }
         kernels::WeightClasses w;
         w.count = 1;
         w.masks[0] = PosMask::first_n(128);
         w.weights[0] = 1;
         return kernels::min_weighted_intersection(batch[0], batch, w) ==
                kernels::scalar::min_weighted_intersection(batch[0], batch, w);
       }},
  };
  int failures = 0;
  for (const auto& c : checks) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception&) {
      ok = false;
    }
    failures += ok ? 0 : 1;
    out << (ok ? "PASS " : "FAIL ") << c.name << '\n';
  }
  out << "backend: " << kernels::active_backend() << '\n';
  return failures ? kExitFailure : kExitOk;
}

std::shared_ptr<OrbitCache> make_cache(const Settings& s, std::ostream& err) {
  if (s.no_cache) return std::make_shared<OrbitCache>();
  std::filesystem::path dir = s.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(s.cache_dir);
  if (dir.empty()) return std::make_shared<OrbitCache>();
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    err << "warning: cache directory " << dir << " unusable (" << ec.message() << "); using memory only\n";
    return std::make_shared<OrbitCache>();
  }
  return std::make_shared<OrbitCache>(dir);
}

}  // namespace

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("EXCSYM_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "excsym";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "excsym";
  return {};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Absolute continuity and singularity of orbital measures on exceptional symmetric spaces"};
  app.name("excsym");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", s.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "markdown", "text"}));
    sub->add_option("--jobs,-j", s.jobs, "Worker threads (default: hardware concurrency)")
        ->check(CLI::Range(1u, 1024u));
    sub->add_option("--ceiling", s.ceiling, "Largest Weyl orbit to enumerate")->check(CLI::PositiveNumber);
    sub->add_option("--cache-dir", s.cache_dir, "Orbit cache directory (overrides EXCSYM_CACHE_DIR)");
    sub->add_flag("--no-cache", s.no_cache, "Keep orbits in memory only");
    sub->add_option("--output,-o", s.output, "Write data to this file instead of stdout");
  };
  auto add_target = [&](CLI::App* sub) {
    sub->add_option("target", s.target, "Space label (EI ... G) or root system (e.g. C3)")->required();
    sub->add_option("--mult", s.multiplicities, "Multiplicities for a bare root system: all=N or short=N,long=N,divisible=N");
    sub->add_option("--side", s.side, "Orbit swept for intersection minima")
        ->check(CLI::IsMember({"auto", "psi", "phix"}));
  };
  auto add_annihilators = [&](CLI::App* sub, bool with_m) {
    sub->add_option("--annihilator,-a", s.annihilators, "Annihilator type label; repeat for a tuple")->required();
    if (with_m) sub->add_option("--m", s.m, "Number of copies of a single annihilator")->check(CLI::Range(2, 64));
  };

  auto* spaces = app.add_subcommand("spaces", "List the twelve exceptional symmetric spaces");
  add_common(spaces);
  auto* classify = app.add_subcommand("classify", "Certified L_X intervals for every annihilator of one space");
  add_common(classify);
  classify->add_option("target", s.target, "Space label")->required();
  auto* wright = app.add_subcommand("wright", "Evaluate the Wright sufficient condition");
  add_common(wright);
  add_target(wright);
  add_annihilators(wright, true);
  wright->add_flag("--reduced", s.reduced, "Also evaluate the multiplicity-one reduced form");
  auto* witness = app.add_subcommand("witness", "Search for a disjointness witness of singularity");
  add_common(witness);
  add_target(witness);
  add_annihilators(witness, true);
  witness->add_flag("--weighted", s.weighted, "Verify disjointness with multiplicity-weighted overlaps");
  auto* orbit = app.add_subcommand("orbit", "Weyl orbit of an annihilator");
  add_common(orbit);
  add_target(orbit);
  add_annihilators(orbit, false);
  auto* report = app.add_subcommand("report", "Classify all twelve spaces");
  add_common(report);
  auto* selftest = app.add_subcommand("selftest", "Quick internal consistency checks");
  add_common(selftest);

  std::vector<std::string> argv_store{"excsym"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto format = parse_report_format(s.format);
    ClassifyOptions co;
    co.engine.orbit.ceiling = s.ceiling;
    co.engine.orbit.threads = s.jobs ? s.jobs : std::max(1u, std::thread::hardware_concurrency());
    co.engine.side = s.side == "psi" ? OrbitSide::Psi : s.side == "phix" ? OrbitSide::PhiX : OrbitSide::Auto;
    co.cache = make_cache(s, err);

    std::ostringstream data;
    int code = kExitOk;
    if (*spaces) {
      code = cmd_spaces(format, data);
    } else if (*classify) {
      code = cmd_classify(s, co, format, data);
    } else if (*report) {
      code = cmd_report(co, format, data);
    } else if (*selftest) {
      code = cmd_selftest(co, data);
    } else {
      auto target = resolve_target(s, co.engine, co.cache);
      if (*wright) code = cmd_wright(s, target, format, data);
      else if (*witness) code = cmd_witness(s, target, format, data);
      else code = cmd_orbit(s, target, format, data);
    }

    if (s.output.empty()) {
      out << data.str();
    } else {
      std::ofstream f(s.output, std::ios::binary);
      if (!(f << data.str())) {
        err << "error: cannot write " << s.output << '\n';
        return kExitFailure;
      }
    }
    if (code != kExitOk) err << "error: run finished with a failing status\n";
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << " (raise --ceiling)\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace excsym::cli
