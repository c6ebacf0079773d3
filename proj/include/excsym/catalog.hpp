#pragma once

// Reference data for the twelve exceptional non-compact symmetric spaces:
// restricted root systems, multiplicities, and the published answer key for
// L_X and L(G).

#include "excsym/rootcore.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace excsym {

/// Where the published L(G) comes from.
enum class LgProvenance {
  Wright,      // the combinatorial sufficient condition
  Embedding,   // inherited from an embedded space; multiplicities not used
  Regularity,  // convolution of two regular orbital measures
};
std::string_view lg_provenance_name(LgProvenance p);

struct SpaceDescriptor {
  std::string cartan_label;  // "EI" ... "EIX", "FI", "FII", "G"
  LieType absolute_type;
  LieType restricted_type;
  int rank = 0;
  int dim_gk = 0;
  /// nullopt for the three spaces whose multiplicities the answer key does
  /// not need (EII, EVI, EIX).
  std::optional<MultiplicityPattern> multiplicity_pattern;
  /// Annihilator types with L_X = 3; every other type has L_X = 2.
  std::vector<LieType> paper_lx_exceptions;
  int paper_lg = 2;
  LgProvenance lg_provenance = LgProvenance::Wright;

  bool multiplicities_known() const noexcept { return multiplicity_pattern.has_value(); }
  /// Published L_X for an annihilator of the given type.
  int paper_lx(const LieType& annihilator) const;
  /// The restricted root system with multiplicities attached. Throws
  /// std::logic_error when the multiplicities are unavailable.
  RootSystem root_system() const;
  /// Human-readable multiplicity pattern, e.g. "short: 8, long: 1".
  std::string multiplicity_text() const;
};

/// Throws std::invalid_argument on an unknown label. Matching is
/// case-insensitive.
const SpaceDescriptor& get_space(std::string_view label);

/// All twelve rows in table order (EI ... EIX, FI, FII, G). Consistency of
/// dimensions, ranks and L(G) is checked on first use.
const std::vector<SpaceDescriptor>& list_spaces();

}  // namespace excsym
