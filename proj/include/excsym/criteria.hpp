#pragma once

// Decision procedures on restricted root data: the Wright sufficient condition
// for absolute continuity (tuple, power and reduced forms), the dimension test
// for singularity, and disjointness witnesses for singularity.
//
// Every dimension here is multiplicity-weighted: dim of a subsystem is the sum
// of the multiplicities of its positive roots.

#include "excsym/kernels.hpp"
#include "excsym/rootcore.hpp"
#include "excsym/subsystems.hpp"
#include "excsym/weyl.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace excsym {

/// Which Weyl orbit to enumerate when minimising dim(Phi_X & w(Psi)). Both
/// give the same value; Auto picks the side with the smaller size bound.
enum class OrbitSide { Auto, Psi, PhiX };

struct EngineOptions {
  OrbitOptions orbit;
  OrbitSide side = OrbitSide::Auto;
};

/// A root system with its Weyl action, catalogue, co-rank one classes and a
/// shared orbit memo. Immutable apart from the memo, which is thread-safe.
class Engine {
 public:
  Engine(RootSystem rs, EngineOptions options = {}, std::shared_ptr<OrbitCache> cache = nullptr);
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const RootSystem& system() const noexcept { return rs_; }
  const WeylAction& action() const noexcept { return action_; }
  const EngineOptions& options() const noexcept { return options_; }
  const std::vector<AnnihilatorType>& catalog() const noexcept { return catalog_; }
  const std::vector<AnnihilatorType>& psi_classes() const noexcept { return psi_classes_; }
  const kernels::WeightClasses& weights() const noexcept { return weights_; }
  int dim_phi() const noexcept { return dim_phi_; }
  std::uint64_t weyl_order() const noexcept { return weyl_order_; }

  std::shared_ptr<const SubsystemOrbit> orbit(Subsystem seed) const;
  OrbitCache& cache() const noexcept { return *cache_; }

 private:
  RootSystem rs_;
  EngineOptions options_;
  std::shared_ptr<OrbitCache> cache_;
  WeylAction action_;
  std::vector<AnnihilatorType> catalog_;
  std::vector<AnnihilatorType> psi_classes_;
  kernels::WeightClasses weights_;
  int dim_phi_ = 0;
  std::uint64_t weyl_order_ = 0;
};

/// Order of the Weyl group of a Lie type, from the closed formulas.
std::uint64_t weyl_group_order(const LieType& t);

/// min over w in W of dim(phiX & w(psi)).
int min_intersection_dim(const Engine& e, Subsystem phiX, Subsystem psi, OrbitSide side = OrbitSide::Auto);

/// Per co-rank one class terms of the Wright inequality.
struct WrightTerm {
  std::string psi_label;
  int dim_psi = 0;
  std::vector<int> min_intersections;  // one per annihilator in the tuple
  long lhs = 0;                        // (m-1)(dim Phi - dim Psi) - 1
  long rhs = 0;                        // sum_i (dim Phi_Xi - min_w dim(Phi_Xi & w Psi))
  long slack = 0;                      // lhs - rhs
};

struct WrightReport {
  bool holds = false;
  int m = 0;
  std::string binding_psi;  // label of the class minimising slack
  long slack = 0;           // slack at the binding class
  std::vector<WrightTerm> terms;
};

/// General tuple form: one annihilator per orbital measure (m = size >= 2).
WrightReport wright_tuple(const Engine& e, const std::vector<Subsystem>& annihilators);

/// Power form: the same annihilator m times.
WrightReport wright_power(const Engine& e, Subsystem phiX, int m);

/// Reduced form for multiplicity-one systems: for each base position j,
/// (m-1)|X1| - m max_{X'} |B1(X')| >= 1 with X1 the positive roots involving
/// alpha_j and B1 those inside the conjugate X'. Enumerates the orbit of
/// phiX and counts base coefficients directly. Throws std::invalid_argument
/// on systems with a multiplicity other than 1.
struct ReducedTerm {
  std::size_t base_position = 0;
  int x1 = 0;
  int max_b1 = 0;
  long slack = 0;  // (m-1)|X1| - m max|B1| - 1
};
struct ReducedReport {
  bool holds = false;
  int m = 0;
  long slack = 0;
  std::size_t binding_position = 0;
  std::vector<ReducedTerm> terms;
};
ReducedReport wright_reduced(const Engine& e, Subsystem phiX, int m);

/// m * (dim Phi - dim Phi_X) < dim_p: the m translated tangent spaces cannot
/// span p, so the m-fold power is singular.
bool dimension_singularity(const RootSystem& rs, Subsystem phiX, int m, int dim_p);

struct Witness {
  int m = 0;
  std::vector<Subsystem> conjugated_annihilators;
  Subsystem psi;
  /// (Phi+ \ A_j) & (Phi+ \ Psi), one per annihilator.
  std::vector<PosMask> intersection_sets;
};

enum class DisjointnessMode {
  RootSets,            // index sets of roots
  WeightedRootSpaces,  // multiplicity-weighted dimension of pairwise overlaps
};

/// Recomputes the intersection sets of w in place and returns them.
std::vector<PosMask> witness_intersection_sets(const RootSystem& rs, const Witness& w);

/// True iff the sets (Phi+ \ A_j) & (Phi+ \ Psi) are pairwise disjoint.
/// Throws std::invalid_argument unless psi is closed of co-rank one and the
/// witness has m >= 2 annihilators.
bool verify_witness(const RootSystem& rs, const Witness& w,
                    DisjointnessMode mode = DisjointnessMode::RootSets);

/// Exhaustive search: co-rank one classes in catalogue order (Psi fixed to
/// the class representative, which loses nothing since conjugating a whole
/// witness preserves validity), then Weyl-orbit members of each annihilator
/// in canonical order. Returns the first hit.
std::optional<Witness> witness_search(const Engine& e, const std::vector<Subsystem>& annihilators);

}  // namespace excsym
