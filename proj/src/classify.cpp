#include "excsym/classify.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace excsym {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::shared_ptr<OrbitCache> cache_of(const ClassifyOptions& options) {
  return options.cache ? options.cache : std::make_shared<OrbitCache>();
}

RecordStatus status_for(const std::optional<int>& upper, int lower, int published) {
  if (!upper) return RecordStatus::Unresolved;
  if (published < lower || published > *upper) return RecordStatus::Mismatch;
  return lower == *upper ? RecordStatus::ExactMatch : RecordStatus::ContainsPaper;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

ClassificationRecord reference_record(const SpaceDescriptor& space) {
  ClassificationRecord r;
  r.space = space.cartan_label;
  r.annihilator = "any";
  r.published_value = space.paper_lg;
  r.lower = space.paper_lg;
  r.status = RecordStatus::Reference;
  r.note = "L(G) = " + std::to_string(space.paper_lg) + " is reference data (" +
           std::string(lg_provenance_name(space.lg_provenance)) + "); multiplicities not used";
  return r;
}

}  // namespace

std::string_view status_name(RecordStatus s) {
  switch (s) {
    case RecordStatus::ExactMatch: return "EXACT_MATCH";
    case RecordStatus::ContainsPaper: return "CONTAINS_PAPER";
    case RecordStatus::Mismatch: return "MISMATCH";
    case RecordStatus::Unresolved: return "UNRESOLVED";
    case RecordStatus::Reference: return "REFERENCE";
  }
  return "?";
}

std::string_view lower_method_name(LowerMethod m) {
  switch (m) {
    case LowerMethod::Floor: return "floor";
    case LowerMethod::Dimension: return "dimension";
    case LowerMethod::Witness: return "witness";
  }
  return "?";
}

std::vector<std::string> root_strings(const RootSystem& rs, PosMask mask) {
  std::vector<std::string> out;
  mask.for_each([&](std::size_t p) { out.push_back(rs.root(p).str()); });
  return out;
}

ClassificationRecord classify_annihilator(const Engine& e, const SpaceDescriptor& space,
                                          const AnnihilatorType& annihilator, const ClassifyOptions& options) {
  const auto& rs = e.system();
  ClassificationRecord r;
  r.space = space.cartan_label;
  r.annihilator = annihilator.label;
  r.type = annihilator.lie_type;
  r.dim_phix = annihilator.dim;
  r.dim_nx = e.dim_phi() - annihilator.dim;
  r.dim_p = space.dim_gk;
  r.published_value = space.paper_lx(annihilator.lie_type);

  const Subsystem phiX = annihilator.representative;
  const int ceiling = options.max_m > 0 ? options.max_m : rs.rank() + 1;

  bool multiplicity_one = true;
  for (std::size_t p = 0; p < rs.num_positive(); ++p) multiplicity_one &= rs.multiplicity(p) == 1;
  const std::uint64_t orbit_bound = e.weyl_order() / weyl_group_order(annihilator.lie_type);
  const bool run_reduced = multiplicity_one && orbit_bound <= options.reduced_orbit_limit;

  bool reduced_ok = true;
  for (int m = 2; m <= ceiling; ++m) {
    auto report = wright_power(e, phiX, m);
    SweepStep step{m, report.holds, report.slack, report.binding_psi, std::nullopt};
    if (run_reduced) {
      step.reduced_holds = wright_reduced(e, phiX, m).holds;
      reduced_ok &= *step.reduced_holds == report.holds;
    }
    r.sweep.push_back(step);
    if (report.holds) {
      r.upper = m;
      r.upper_report = std::move(report);
      break;
    }
  }
  if (run_reduced) r.reduced_agrees = reduced_ok;

  // Singularity at m implies singularity at every smaller m, so the first
  // proof found scanning downward fixes the lower bound.
  const int top = r.upper ? *r.upper - 1 : ceiling;
  for (int m = top; m >= 2; --m) {
    if (dimension_singularity(rs, phiX, m, space.dim_gk)) {
      r.lower_method = LowerMethod::Dimension;
    } else if (auto w = witness_search(e, std::vector<Subsystem>(static_cast<std::size_t>(m), phiX))) {
      r.lower_method = LowerMethod::Witness;
      ClassificationRecord::WitnessRoots text;
      text.psi = root_strings(rs, w->psi.positive);
      for (const auto& a : w->conjugated_annihilators) text.annihilators.push_back(root_strings(rs, a.positive));
      for (const auto& s : w->intersection_sets) text.intersection_sets.push_back(root_strings(rs, s));
      r.witness_roots = std::move(text);
      r.witness = std::move(w);
    } else {
      r.undecided_m.push_back(m);
      continue;
    }
    r.singular_m = m;
    r.lower = m + 1;
    break;
  }

  r.status = status_for(r.upper, r.lower, r.published_value);
  if (r.status == RecordStatus::ContainsPaper)
    r.note = "published value lies inside the certified interval; the combinatorial tests do not close it";
  else if (r.status == RecordStatus::Unresolved)
    r.note = "sufficient condition fails for every m up to " + std::to_string(ceiling);
  if (r.reduced_agrees && !*r.reduced_agrees) r.note += (r.note.empty() ? "" : "; ") + std::string("reduced form disagrees");
  return r;
}

SpaceClassification classify_space(std::string_view label, const ClassifyOptions& options) {
  const auto& space = get_space(label);
  SpaceClassification out;
  out.space = &space;
  if (!space.multiplicities_known()) {
    out.records.push_back(reference_record(space));
    return out;
  }
  const Engine engine(space.root_system(), options.engine, cache_of(options));
  for (const auto& a : engine.catalog()) out.records.push_back(classify_annihilator(engine, space, a, options));
  out.lg = verify_lg(engine, space.paper_lg);
  return out;
}

LgVerdict verify_lg(const Engine& e, int m) {
  if (m < 2) throw std::invalid_argument("verify_lg: m must be at least 2");
  // Every proper annihilator lies in a conjugate of a co-rank one one, and
  // the condition only gets easier for smaller annihilators, so multisets
  // of co-rank one classes suffice.
  const auto& maximal = e.psi_classes();
  const auto& psis = e.psi_classes();
  const std::size_t n = maximal.size();
  std::vector<std::vector<int>> deficit(n, std::vector<int>(psis.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < psis.size(); ++k)
      deficit[i][k] = maximal[i].dim -
                      min_intersection_dim(e, maximal[i].representative, psis[k].representative, e.options().side);

  LgVerdict v;
  v.m = m;
  v.holds = true;
  bool first = true;
  std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
  std::vector<std::size_t> worst;
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t depth, std::size_t from) {
    if (depth == pick.size()) {
      ++v.tuples_checked;
      for (std::size_t k = 0; k < psis.size(); ++k) {
        long rhs = 0;
        for (auto i : pick) rhs += deficit[i][k];
        const long slack = static_cast<long>(m - 1) * (e.dim_phi() - psis[k].dim) - 1 - rhs;
        if (first || slack < v.worst_slack) {
          first = false;
          v.worst_slack = slack;
          v.binding_psi = psis[k].label;
          worst = pick;
        }
      }
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      pick[depth] = i;
      visit(depth + 1, i);
    }
  };
  if (n > 0) visit(0, 0);
  v.holds = v.worst_slack >= 0;
  for (auto i : worst) v.worst_tuple.push_back(maximal[i].label);

  // Re-derive the worst tuple through the general tuple form.
  if (!worst.empty()) {
    std::vector<Subsystem> tuple;
    for (auto i : worst) tuple.push_back(maximal[i].representative);
    const auto check = wright_tuple(e, tuple);
    if (check.slack != v.worst_slack || check.holds != v.holds)
      throw std::logic_error("verify_lg: tabulated slack disagrees with the tuple form");
  }
  return v;
}

std::optional<LgVerdict> verify_lg(std::string_view label, const ClassifyOptions& options) {
  const auto& space = get_space(label);
  if (!space.multiplicities_known()) return std::nullopt;
  const Engine engine(space.root_system(), options.engine, cache_of(options));
  return verify_lg(engine, space.paper_lg);
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "markdown" || name == "md") return ReportFormat::Markdown;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (json, csv, markdown, text)");
}

bool all_records_consistent(const std::vector<SpaceClassification>& spaces) {
  for (const auto& s : spaces) {
    for (const auto& r : s.records)
      if (r.status == RecordStatus::Mismatch || r.status == RecordStatus::Unresolved) return false;
    if (s.lg && !s.lg->holds) return false;
  }
  return true;
}

namespace {

Json record_json(const ClassificationRecord& r) {
  Json j;
  j["space"] = r.space;
  j["annihilator"] = r.annihilator;
  j["type"] = r.status == RecordStatus::Reference ? Json(nullptr) : Json(r.type.label());
  j["dim_phix"] = r.dim_phix;
  j["dim_nx"] = r.dim_nx;
  j["dim_p"] = r.dim_p;
  j["lower"] = r.lower;
  j["upper"] = r.upper ? Json(*r.upper) : Json(nullptr);
  j["published_value"] = r.published_value;
  j["status"] = status_name(r.status);
  Json sweep = Json::array();
  for (const auto& s : r.sweep) {
    Json e;
    e["m"] = s.m;
    e["holds"] = s.holds;
    e["slack"] = s.slack;
    e["binding_psi"] = s.binding_psi;
    e["reduced_holds"] = s.reduced_holds ? Json(*s.reduced_holds) : Json(nullptr);
    sweep.push_back(std::move(e));
  }
  j["sweep"] = std::move(sweep);
  if (r.upper_report) {
    Json terms = Json::array();
    for (const auto& t : r.upper_report->terms) {
      Json e;
      e["psi"] = t.psi_label;
      e["dim_psi"] = t.dim_psi;
      e["min_intersection"] = t.min_intersections.empty() ? 0 : t.min_intersections.front();
      e["lhs"] = t.lhs;
      e["rhs"] = t.rhs;
      e["slack"] = t.slack;
      terms.push_back(std::move(e));
    }
    j["upper_terms"] = std::move(terms);
  } else {
    j["upper_terms"] = nullptr;
  }
  Json lower;
  lower["method"] = lower_method_name(r.lower_method);
  lower["singular_m"] = r.singular_m ? Json(r.singular_m) : Json(nullptr);
  lower["undecided_m"] = r.undecided_m;
  if (r.witness_roots) {
    Json w;
    w["psi"] = r.witness_roots->psi;
    w["annihilators"] = r.witness_roots->annihilators;
    w["intersection_sets"] = r.witness_roots->intersection_sets;
    lower["witness"] = std::move(w);
  } else {
    lower["witness"] = nullptr;
  }
  j["lower_evidence"] = std::move(lower);
  j["reduced_agrees"] = r.reduced_agrees ? Json(*r.reduced_agrees) : Json(nullptr);
  j["note"] = r.note;
  return j;
}

Json lg_json(const SpaceClassification& s) {
  Json j;
  j["published"] = s.space->paper_lg;
  j["provenance"] = lg_provenance_name(s.space->lg_provenance);
  if (!s.lg) {
    j["verified"] = nullptr;
    return j;
  }
  j["verified"] = s.lg->holds;
  j["m"] = s.lg->m;
  j["tuples_checked"] = s.lg->tuples_checked;
  j["worst_slack"] = s.lg->worst_slack;
  j["worst_tuple"] = s.lg->worst_tuple;
  j["binding_psi"] = s.lg->binding_psi;
  return j;
}

std::string render_json(const std::vector<SpaceClassification>& spaces) {
  Json doc;
  doc["schema"] = "excsym.report";
  doc["schema_version"] = kSchemaVersion;
  Json arr = Json::array();
  std::map<std::string, int> counts;
  for (const auto& s : spaces) {
    Json j;
    j["space"] = s.space->cartan_label;
    j["absolute_type"] = s.space->absolute_type.label();
    j["restricted_type"] = s.space->restricted_type.label();
    j["rank"] = s.space->rank;
    j["dim_gk"] = s.space->dim_gk;
    j["multiplicities"] = s.space->multiplicity_text();
    j["lg"] = lg_json(s);
    Json recs = Json::array();
    for (const auto& r : s.records) {
      recs.push_back(record_json(r));
      ++counts[std::string(status_name(r.status))];
    }
    j["records"] = std::move(recs);
    arr.push_back(std::move(j));
  }
  doc["spaces"] = std::move(arr);
  Json summary;
  for (auto st : {RecordStatus::ExactMatch, RecordStatus::ContainsPaper, RecordStatus::Mismatch,
                  RecordStatus::Unresolved, RecordStatus::Reference})
    summary[std::string(status_name(st))] = counts[std::string(status_name(st))];
  summary["consistent"] = all_records_consistent(spaces);
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

std::string interval(const ClassificationRecord& r) {
  if (r.status == RecordStatus::Reference) return "-";
  return "[" + std::to_string(r.lower) + ", " + (r.upper ? std::to_string(*r.upper) : std::string("?")) + "]";
}

std::string evidence(const ClassificationRecord& r) {
  if (r.status == RecordStatus::Reference) return r.note;
  std::string out;
  if (r.upper_report)
    out = "Wright m=" + std::to_string(*r.upper) + " slack " + std::to_string(r.upper_report->slack) + " at " +
          r.upper_report->binding_psi;
  if (r.lower_method == LowerMethod::Dimension)
    out += "; dimension test m=" + std::to_string(r.singular_m) + ": " + std::to_string(r.singular_m) + "*" +
           std::to_string(r.dim_nx) + " < " + std::to_string(r.dim_p);
  else if (r.lower_method == LowerMethod::Witness)
    out += "; disjointness witness m=" + std::to_string(r.singular_m);
  if (!r.undecided_m.empty()) out += "; singularity undecided at m=" + std::to_string(r.undecided_m.front());
  return out;
}

std::string render_markdown(const std::vector<SpaceClassification>& spaces) {
  std::ostringstream os;
  os << "# L_X for the exceptional symmetric spaces\n";
  for (const auto& s : spaces) {
    const auto& d = *s.space;
    os << "\n## " << d.cartan_label << " (restricted " << d.restricted_type.label() << ", rank " << d.rank
       << ", dim G/K " << d.dim_gk << ")\n\n";
    os << "Multiplicities: " << d.multiplicity_text() << "\n\n";
    os << "| Type of X | dim Phi_X | dim N_X | L_X interval | published L_X | status | evidence |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : s.records)
      os << "| " << r.annihilator << " | " << r.dim_phix << " | " << r.dim_nx << " | " << interval(r) << " | "
         << r.published_value << " | " << status_name(r.status) << " | " << evidence(r) << " |\n";
    os << "\nL(G) = " << d.paper_lg << " (" << lg_provenance_name(d.lg_provenance) << "): ";
    if (s.lg)
      os << (s.lg->holds ? "verified" : "NOT verified") << " over " << s.lg->tuples_checked
         << " tuples, worst slack " << s.lg->worst_slack << " at (" << join(s.lg->worst_tuple, ", ") << ") vs "
         << s.lg->binding_psi << "\n";
    else
      os << "reference data\n";
  }
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const std::vector<SpaceClassification>& spaces) {
  std::ostringstream os;
  os << "space,annihilator,dim_phix,dim_nx,lower,upper,published_value,status,binding_psi,upper_slack,"
        "lower_method,singular_m\n";
  for (const auto& s : spaces)
    for (const auto& r : s.records) {
      os << r.space << ',' << csv_field(r.annihilator) << ',' << r.dim_phix << ',' << r.dim_nx << ',' << r.lower
         << ',' << (r.upper ? std::to_string(*r.upper) : "") << ',' << r.published_value << ','
         << status_name(r.status) << ',' << (r.upper_report ? r.upper_report->binding_psi : "") << ','
         << (r.upper_report ? std::to_string(r.upper_report->slack) : "") << ','
         << lower_method_name(r.lower_method) << ',' << (r.singular_m ? std::to_string(r.singular_m) : "")
         << '\n';
    }
  return os.str();
}

std::string render_text(const std::vector<SpaceClassification>& spaces) {
  std::ostringstream os;
  for (const auto& s : spaces) {
    const auto& d = *s.space;
    os << d.cartan_label << "  restricted " << d.restricted_type.label() << "  rank " << d.rank << "  dim "
       << d.dim_gk << "  multiplicities " << d.multiplicity_text() << '\n';
    for (const auto& r : s.records)
      os << "  " << std::left << std::setw(20) << r.annihilator << std::setw(10) << interval(r) << "published "
         << r.published_value << "  " << std::setw(15) << status_name(r.status) << evidence(r) << '\n';
    os << "  L(G) = " << d.paper_lg << ": ";
    if (s.lg)
      os << (s.lg->holds ? "verified" : "NOT verified") << " (" << s.lg->tuples_checked << " tuples, worst slack "
         << s.lg->worst_slack << ")\n";
    else
      os << "reference (" << lg_provenance_name(d.lg_provenance) << ")\n";
  }
  return os.str();
}

}  // namespace

std::string render_classifications(const std::vector<SpaceClassification>& spaces, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return render_json(spaces);
    case ReportFormat::Markdown: return render_markdown(spaces);
    case ReportFormat::Csv: return render_csv(spaces);
    case ReportFormat::Text: return render_text(spaces);
  }
  throw std::invalid_argument("unknown report format");
}

std::vector<SpaceClassification> classify_all(const ClassifyOptions& options) {
  ClassifyOptions shared = options;
  shared.cache = cache_of(options);
  std::vector<SpaceClassification> spaces;
  for (const auto& d : list_spaces()) spaces.push_back(classify_space(d.cartan_label, shared));
  return spaces;
}

std::string full_report(ReportFormat format, const ClassifyOptions& options) {
  return render_classifications(classify_all(options), format);
}

}  // namespace excsym
