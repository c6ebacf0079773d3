#pragma once

// Per-space classification: a certified interval [lower, upper] for L_X for
// every annihilator class, the L(G) check, and report rendering.

#include "excsym/catalog.hpp"
#include "excsym/criteria.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace excsym {

enum class RecordStatus {
  ExactMatch,     // lower == upper == published value
  ContainsPaper,  // lower <= published <= upper, interval not degenerate
  Mismatch,       // published value outside the interval
  Unresolved,     // no m up to the ceiling satisfies the sufficient condition
  Reference,      // catalogue reference row, nothing computed
};
std::string_view status_name(RecordStatus s);

/// One step of the upward m sweep.
struct SweepStep {
  int m = 0;
  bool holds = false;
  long slack = 0;
  std::string binding_psi;
  /// Result of the reduced form at the same m, when it was run.
  std::optional<bool> reduced_holds;
};

enum class LowerMethod { Floor, Dimension, Witness };
std::string_view lower_method_name(LowerMethod m);

struct ClassificationRecord {
  std::string space;
  std::string annihilator;  // catalogue label, e.g. "A1xC1" or "A5'"
  LieType type;
  int dim_phix = 0;
  int dim_nx = 0;
  int dim_p = 0;
  std::optional<int> upper;
  int lower = 2;
  int published_value = 2;
  RecordStatus status = RecordStatus::Unresolved;

  std::vector<SweepStep> sweep;
  /// Full Wright report at m = upper.
  std::optional<WrightReport> upper_report;

  LowerMethod lower_method = LowerMethod::Floor;
  /// m at which singularity was proven (lower = singular_m + 1).
  int singular_m = 0;
  std::optional<Witness> witness;
  /// The witness written out as root coordinates.
  struct WitnessRoots {
    std::vector<std::string> psi;
    std::vector<std::vector<std::string>> annihilators;
    std::vector<std::vector<std::string>> intersection_sets;
  };
  std::optional<WitnessRoots> witness_roots;
  /// m values below upper where both singularity tests came back negative.
  std::vector<int> undecided_m;

  /// True when the reduced form was run for every swept m and agreed.
  std::optional<bool> reduced_agrees;
  std::string note;
};

struct LgVerdict {
  bool holds = false;
  int m = 0;
  std::size_t tuples_checked = 0;
  long worst_slack = 0;
  std::vector<std::string> worst_tuple;
  std::string binding_psi;
};

struct SpaceClassification {
  const SpaceDescriptor* space = nullptr;
  std::vector<ClassificationRecord> records;
  /// nullopt for spaces whose L(G) is reference data only.
  std::optional<LgVerdict> lg;
};

struct ClassifyOptions {
  EngineOptions engine;
  std::shared_ptr<OrbitCache> cache;
  /// Largest m tried in the upward sweep; 0 means rank + 1.
  int max_m = 0;
  /// The reduced form runs as a cross-check whenever the annihilator orbit
  /// is bounded by this many members.
  std::uint64_t reduced_orbit_limit = 250'000;
};

/// Classifies one annihilator class of an engine built for `space`.
ClassificationRecord classify_annihilator(const Engine& e, const SpaceDescriptor& space,
                                          const AnnihilatorType& annihilator, const ClassifyOptions& options);

SpaceClassification classify_space(std::string_view label, const ClassifyOptions& options = {});

/// Wright tuple condition for every multiset of m = L(G) maximal proper
/// annihilator classes. nullopt when the space's multiplicities are not
/// available.
std::optional<LgVerdict> verify_lg(std::string_view label, const ClassifyOptions& options = {});
LgVerdict verify_lg(const Engine& e, int m);

enum class ReportFormat { Json, Markdown, Csv, Text };
/// Throws std::invalid_argument on an unknown name.
ReportFormat parse_report_format(std::string_view name);

std::string render_classifications(const std::vector<SpaceClassification>& spaces, ReportFormat format);

/// Classifies all twelve spaces in table order, sharing one orbit cache.
std::vector<SpaceClassification> classify_all(const ClassifyOptions& options = {});

/// Classifies all twelve spaces and renders them.
std::string full_report(ReportFormat format, const ClassifyOptions& options = {});

/// Worst status over the records: Mismatch or Unresolved make a run fail.
bool all_records_consistent(const std::vector<SpaceClassification>& spaces);

/// Positive roots of a mask as coordinate strings.
std::vector<std::string> root_strings(const RootSystem& rs, PosMask mask);

}  // namespace excsym
