#pragma once

// R-closed subsystems: closure, Lie type, weighted dimension, and the
// catalogue of annihilator types up to Weyl conjugacy.

#include "excsym/rootcore.hpp"
#include "excsym/rootset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace excsym {

/// Bitmask over base positions (bit j = simple root j).
using BaseSubset = std::uint32_t;

struct AnnihilatorType {
  Subsystem representative;
  LieType lie_type;
  /// Type label, with primes appended when several conjugacy classes share
  /// one type (A5' and A5'' in E7).
  std::string label;
  int dim = 0;
  int corank = 0;
  /// Base subset whose closure is the representative.
  BaseSubset base_subset = 0;
};

/// Phi intersected with the rational span of seed.
Subsystem r_closure(const RootSystem& rs, Subsystem seed);
bool is_r_closed(const RootSystem& rs, Subsystem s);

/// Dimension of span(s).
int span_rank(const RootSystem& rs, Subsystem s);

/// Roots supported on the simple roots in `subset`. Equals the R-closure of
/// those simple roots.
Subsystem parabolic_subsystem(const RootSystem& rs, BaseSubset subset);

/// Builds a subsystem from explicit root vectors (either sign accepted).
/// Throws std::invalid_argument if a vector is not a root.
Subsystem subsystem_from_roots(const RootSystem& rs, const std::vector<ExactVector>& roots);

/// Simple roots of s with respect to the positive system s & Phi+.
std::vector<std::size_t> simple_roots_of(const RootSystem& rs, Subsystem s);

/// Decomposes s into irreducible components and names each one. Throws
/// std::logic_error on a component matching no known type.
LieType identify_type(const RootSystem& rs, Subsystem s);

/// Sum of multiplicities over the positive roots of s.
int dim_subsystem(const RootSystem& rs, Subsystem s);

/// Classes of base subsets under Weyl conjugacy (J ~ K iff w(J) = K for some
/// w), via the elementary moves J -> opp_{J+s}(J). Each inner vector is
/// sorted, and classes are ordered by their smallest member.
std::vector<std::vector<BaseSubset>> base_subset_classes(const RootSystem& rs);

/// Co-rank one closed subsystems up to conjugacy: closures of base-minus-one.
std::vector<AnnihilatorType> corank_one_closed(const RootSystem& rs);

/// All proper annihilator types up to conjugacy, including the empty type of
/// regular elements. Ordered by rank, then label, then dim.
std::vector<AnnihilatorType> annihilator_catalog(const RootSystem& rs);

/// Looks up a catalogue entry by label ("A1", "A5'", "regular", ...). A bare
/// type label matching several primed classes is rejected as ambiguous.
const AnnihilatorType& find_annihilator(const std::vector<AnnihilatorType>& catalog, const std::string& label);

}  // namespace excsym
