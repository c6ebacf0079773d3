#pragma once

// Root systems in exact arithmetic.
//
// Coordinates are stored doubled, so every root of every supported system is
// an integer vector. Inner products are reported times four (inner4), which
// keeps them integral as well.
//
// Root indexing: a system with P positive roots has 2P roots. Index p < P is
// the p-th positive root, index p + P is its negative. Positive roots are
// ordered by height, then by descending base-coefficient vector, so the simple
// roots occupy indices 0..rank-1 in base order.

#include "excsym/rootset.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace excsym {

enum class Family { A, B, C, D, E, F, G, BC };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view s);

/// One irreducible factor of a Lie type.
///
/// `short_roots` marks a factor built from short roots of a doubly-laced
/// parent (F4 or G2) and is rendered with a leading '~', the usual tilde
/// notation: in G2 the long-root A1 and short-root ~A1 are different classes.
struct TypeFactor {
  Family family = Family::A;
  int rank = 0;
  bool short_roots = false;

  friend auto operator<=>(const TypeFactor&, const TypeFactor&) = default;
};

class LieType {
 public:
  LieType() = default;
  explicit LieType(std::vector<TypeFactor> factors);

  static LieType irreducible(Family f, int rank) { return LieType({TypeFactor{f, rank, false}}); }

  /// Grammar: "regular" | "0" | factor ("x" factor)*, factor = ["~"] family rank,
  /// family one of A B C D E F G BC. Case-sensitive.
  static LieType parse(std::string_view s);

  const std::vector<TypeFactor>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  int rank() const noexcept;

  /// "regular" for the empty type, else e.g. "A1xC1".
  std::string label() const;

  friend auto operator<=>(const LieType&, const LieType&) = default;

 private:
  std::vector<TypeFactor> factors_;  // kept sorted
};

/// Vector with half-integer coordinates, stored doubled.
class ExactVector {
 public:
  ExactVector() = default;
  static ExactVector from_doubled(std::vector<int> doubled) { return ExactVector(std::move(doubled)); }
  static ExactVector from_integers(const std::vector<int>& coords);

  std::size_t dim() const noexcept { return d_.size(); }
  int doubled(std::size_t i) const { return d_.at(i); }
  const std::vector<int>& doubled_coords() const noexcept { return d_; }

  ExactVector operator-() const;
  friend ExactVector operator+(const ExactVector& a, const ExactVector& b);
  friend ExactVector operator-(const ExactVector& a, const ExactVector& b);
  friend ExactVector operator*(int k, const ExactVector& v);
  friend bool operator==(const ExactVector&, const ExactVector&) = default;
  friend auto operator<=>(const ExactVector&, const ExactVector&) = default;

  /// Human-readable coordinates, e.g. "(1, -1/2, 0)".
  std::string str() const;

 private:
  explicit ExactVector(std::vector<int> d) : d_(std::move(d)) {}
  std::vector<int> d_;
};

/// Four times the Euclidean inner product.
std::int64_t inner4(const ExactVector& a, const ExactVector& b);

/// Classes used to key multiplicity patterns. Divisible roots are those of
/// the form 2*beta with beta a root (only in BC systems). Among the remaining
/// roots, Short/Long split by length; single-length systems only have Short.
enum class RootClass { Short, Long, Divisible };

std::string_view root_class_name(RootClass c);
std::optional<RootClass> parse_root_class(std::string_view s);

struct MultiplicityPattern {
  std::optional<int> uniform;
  std::map<RootClass, int> by_class;

  static MultiplicityPattern all(int m) { return {m, {}}; }
};

class RootSystem {
 public:
  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  const LieType& lie_type() const noexcept { return type_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }

  std::size_t num_positive() const noexcept { return positive_count_; }
  std::size_t num_roots() const noexcept { return 2 * positive_count_; }
  bool is_positive(std::size_t idx) const noexcept { return idx < positive_count_; }
  std::size_t negate(std::size_t idx) const noexcept {
    return idx < positive_count_ ? idx + positive_count_ : idx - positive_count_;
  }
  /// Positive representative of +-alpha.
  std::size_t abs_index(std::size_t idx) const noexcept {
    return idx < positive_count_ ? idx : idx - positive_count_;
  }

  const ExactVector& root(std::size_t idx) const { return roots_.at(idx); }
  std::optional<std::size_t> find(const ExactVector& v) const;

  /// Positive indices of the simple roots, in base order (always 0..rank-1).
  const std::vector<std::size_t>& base() const noexcept { return base_; }

  /// Coefficient of simple root j in the expansion of root idx.
  int coefficient(std::size_t idx, std::size_t j) const;
  int height(std::size_t idx) const;

  std::int64_t norm4(std::size_t idx) const { return norm4_.at(abs_index(idx)); }
  RootClass root_class(std::size_t idx) const { return class_.at(abs_index(idx)); }
  /// Root classes present, in enum order.
  std::vector<RootClass> classes_present() const;
  int multiplicity(std::size_t idx) const { return mult_.at(abs_index(idx)); }

  /// Index of alpha_p + alpha_q when that sum is a positive root.
  std::optional<std::size_t> positive_sum(std::size_t p, std::size_t q) const;

  PosMask all_positive() const noexcept { return PosMask::first_n(positive_count_); }
  bool reduced() const noexcept { return reduced_; }

  /// Sum of multiplicities over positive roots: dim of the whole system.
  int dimension() const;

  /// Short identifier used for cache keys and reports, e.g. "C3[s8,l1]".
  std::string key() const;

 private:
  friend RootSystem build_root_system(Family family, int rank);
  friend RootSystem attach_multiplicities(const RootSystem& rs, const MultiplicityPattern& pattern);

  Family family_ = Family::A;
  int rank_ = 0;
  LieType type_;
  std::size_t ambient_ = 0;
  std::size_t positive_count_ = 0;
  bool reduced_ = true;
  std::vector<ExactVector> roots_;
  std::vector<std::size_t> base_;
  std::vector<std::vector<int>> coeffs_;  // per positive root
  std::vector<std::int64_t> norm4_;       // per positive root
  std::vector<RootClass> class_;          // per positive root
  std::vector<int> mult_;                 // per positive root
  std::vector<std::int32_t> sum_table_;   // P*P, -1 when not a root
  std::map<std::vector<int>, std::size_t> lookup_;
};

/// Builds the standard root system of the given family and rank with all
/// multiplicities 1. Throws std::invalid_argument on an invalid pair.
RootSystem build_root_system(Family family, int rank);

/// Returns a copy of rs with multiplicities populated from the pattern.
/// Throws std::invalid_argument if the pattern names a class absent from rs,
/// leaves a present class unassigned, or has a non-positive entry.
RootSystem attach_multiplicities(const RootSystem& rs, const MultiplicityPattern& pattern);

/// Reflection of target in the hyperplane orthogonal to root `mirror`.
/// Throws std::domain_error if the image leaves the half-integer lattice.
ExactVector reflect(const RootSystem& rs, std::size_t mirror, const ExactVector& target);

/// True iff the positive root has a nonzero coefficient on simple root j,
/// i.e. it does not lie in the span of the other simple roots.
bool base_coefficient_nonzero(const RootSystem& rs, std::size_t root, std::size_t j);

}  // namespace excsym
