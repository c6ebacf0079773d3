#pragma once

// Weyl group actions on root indices and on subsystems.

#include "excsym/rootcore.hpp"
#include "excsym/rootset.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace excsym {

/// Raised when an enumeration would exceed its configured ceiling. Never
/// swallowed: a partial orbit is not a result.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultOrbitCeiling = 4'000'000;

/// Permutation of root indices induced by a Weyl group element, together with
/// a (possibly non-reduced) word in the simple reflections producing it.
struct WeylElement {
  std::vector<std::uint16_t> perm;
  std::vector<int> word;

  std::size_t operator()(std::size_t idx) const { return perm.at(idx); }
  bool is_identity() const;
  /// (this * other)(x) = this(other(x)); word is the concatenation.
  WeylElement compose(const WeylElement& other) const;
  static WeylElement identity(std::size_t num_roots);
};

/// One generator per base element, in base order.
std::vector<WeylElement> simple_reflections(const RootSystem& rs);

/// Image of a negation-closed subsystem under w.
Subsystem apply(const RootSystem& rs, const WeylElement& w, Subsystem s);

/// Order of the Weyl group, computed through the chain of standard parabolic
/// subgroups W > W_{S-j} > ... via orbit-stabilizer; never lists elements.
std::uint64_t group_order(const RootSystem& rs, std::size_t ceiling = kDefaultOrbitCeiling);

struct SubsystemOrbit {
  std::vector<Subsystem> members;  // sorted canonical forms
  std::size_t size() const noexcept { return members.size(); }
  bool contains(const Subsystem& s) const;
};

struct OrbitOptions {
  std::size_t ceiling = kDefaultOrbitCeiling;
  unsigned threads = 1;
};

/// Precomputed generator tables for fast orbit enumeration.
class WeylAction {
 public:
  explicit WeylAction(const RootSystem& rs);

  const RootSystem& system() const noexcept { return *rs_; }
  const std::vector<WeylElement>& generators() const noexcept { return gens_; }
  PosMask apply_generator(std::size_t g, PosMask m) const noexcept;

  /// Breadth-first closure of seed under the simple reflections. Throws
  /// ResourceLimitError past options.ceiling members.
  SubsystemOrbit orbit(Subsystem seed, const OrbitOptions& options = {}) const;

  /// BFS from seed that also records, for each member, a word mapping the
  /// seed onto it. Intended for witness construction on small orbits.
  std::vector<std::pair<Subsystem, WeylElement>> orbit_with_words(
      Subsystem seed, const OrbitOptions& options = {}) const;

 private:
  const RootSystem* rs_;
  std::vector<WeylElement> gens_;
  // table_[g][byte][value]: image of the bits `value` at byte position `byte`.
  std::vector<std::array<std::array<PosMask, 256>, 16>> table_;
};

SubsystemOrbit orbit_of_subsystem(const RootSystem& rs, Subsystem seed, const OrbitOptions& options = {});

/// True iff s2 lies in the Weyl orbit of s1. Rejects early on cardinality,
/// per-class root counts and Lie type before enumerating.
bool are_conjugate(const RootSystem& rs, Subsystem s1, Subsystem s2, const OrbitOptions& options = {});

/// Memo table of enumerated orbits keyed by (system key, seed), optionally
/// persisted in a directory. Thread-safe; concurrent requests for the same key
/// compute it once.
///
/// File format (one file per orbit, name "<system-key>_<seed-hex>.orb"):
///   bytes 0-7   magic "EXSORB01"
///   u32         format version (1)
///   u32         length of system key, then the key bytes
///   16 bytes    seed mask (two little-endian u64, low word first)
///   u64         member count N
///   N*16 bytes  members, sorted, same encoding as the seed
///   u64         FNV-1a checksum over the member bytes
/// Files that fail validation are ignored and recomputed.
class OrbitCache {
 public:
  OrbitCache() = default;
  explicit OrbitCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::shared_ptr<const SubsystemOrbit> get(const WeylAction& action, Subsystem seed,
                                            const OrbitOptions& options = {});
  std::size_t computed() const;
  std::size_t loaded_from_disk() const;

  struct Entry {
    std::string system_key;
    Subsystem seed;
    std::shared_ptr<const SubsystemOrbit> orbit;
  };
  /// Every orbit held in memory, ordered by (system key, seed).
  std::vector<Entry> inventory() const;
  const std::optional<std::filesystem::path>& directory() const noexcept { return dir_; }

  static void write_file(const std::filesystem::path& file, const std::string& system_key,
                         Subsystem seed, const SubsystemOrbit& orbit);
  /// nullopt when missing, truncated, corrupt, or keyed differently.
  static std::optional<SubsystemOrbit> read_file(const std::filesystem::path& file,
                                                 const std::string& system_key, Subsystem seed);

 private:
  struct Slot {
    std::once_flag once;
    std::shared_ptr<const SubsystemOrbit> value;
  };
  std::optional<std::filesystem::path> dir_;
  mutable std::mutex mu_;
  std::map<std::pair<std::string, Subsystem>, std::shared_ptr<Slot>> slots_;
  std::size_t computed_ = 0;
  std::size_t loaded_ = 0;
};

}  // namespace excsym
