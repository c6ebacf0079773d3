#include "excsym/weyl.hpp"

#include "excsym/parallel.hpp"
#include "excsym/subsystems.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace excsym {

// ---------------------------------------------------------------------------
// Elements

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

WeylElement WeylElement::compose(const WeylElement& other) const {
  WeylElement out;
  out.perm.resize(other.perm.size());
  for (std::size_t i = 0; i < other.perm.size(); ++i) out.perm[i] = perm.at(other.perm[i]);
  out.word = word;
  out.word.insert(out.word.end(), other.word.begin(), other.word.end());
  return out;
}

WeylElement WeylElement::identity(std::size_t num_roots) {
  WeylElement e;
  e.perm.resize(num_roots);
  for (std::size_t i = 0; i < num_roots; ++i) e.perm[i] = static_cast<std::uint16_t>(i);
  return e;
}

std::vector<WeylElement> simple_reflections(const RootSystem& rs) {
  std::vector<WeylElement> gens;
  for (std::size_t j = 0; j < rs.base().size(); ++j) {
    WeylElement g;
    g.word = {static_cast<int>(j)};
    g.perm.resize(rs.num_roots());
    for (std::size_t idx = 0; idx < rs.num_roots(); ++idx) {
      auto image = rs.find(reflect(rs, rs.base()[j], rs.root(idx)));
      if (!image) throw std::logic_error("reflection of a root is not a root");
      g.perm[idx] = static_cast<std::uint16_t>(*image);
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

Subsystem apply(const RootSystem& rs, const WeylElement& w, Subsystem s) {
  Subsystem out;
  s.positive.for_each([&](std::size_t p) { out.positive.set(rs.abs_index(w(p))); });
  return out;
}

// ---------------------------------------------------------------------------
// Group order

namespace {

std::uint64_t parabolic_order(const RootSystem& rs, const std::vector<WeylElement>& gens,
                              std::vector<std::size_t> subset, std::size_t ceiling) {
  if (subset.empty()) return 1;
  const std::size_t j = subset.back();
  subset.pop_back();

  // The function alpha -> (coefficient of alpha_j in alpha) is the pairing
  // with the fundamental coweight for j. Its stabilizer in W_S is the
  // standard parabolic W_{S - j}, so |W_S| = |orbit| * |W_{S-j}|.
  using Pairing = std::string;
  Pairing start(rs.num_roots(), 0);
  for (std::size_t idx = 0; idx < rs.num_roots(); ++idx)
    start[idx] = static_cast<char>(rs.coefficient(idx, j));

  std::unordered_set<Pairing> seen{start};
  std::vector<Pairing> frontier{start};
  std::vector<std::size_t> active = subset;
  active.push_back(j);
  while (!frontier.empty()) {
    std::vector<Pairing> next;
    for (const auto& f : frontier)
      for (auto g : active) {
        Pairing h(f.size(), 0);
        for (std::size_t idx = 0; idx < f.size(); ++idx) h[idx] = f[gens[g].perm[idx]];
        if (seen.insert(h).second) {
          if (seen.size() > ceiling)
            throw ResourceLimitError("group_order: coset enumeration exceeded ceiling of " +
                                     std::to_string(ceiling));
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  return seen.size() * parabolic_order(rs, gens, std::move(subset), ceiling);
}

}  // namespace

std::uint64_t group_order(const RootSystem& rs, std::size_t ceiling) {
  const auto gens = simple_reflections(rs);
  std::vector<std::size_t> all(gens.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return parabolic_order(rs, gens, all, ceiling);
}

// ---------------------------------------------------------------------------
// Orbits

bool SubsystemOrbit::contains(const Subsystem& s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

WeylAction::WeylAction(const RootSystem& rs) : rs_(&rs), gens_(simple_reflections(rs)) {
  table_.resize(gens_.size());
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    std::array<PosMask, kMaxPositiveRoots> image{};
    for (std::size_t p = 0; p < rs.num_positive(); ++p) image[p].set(rs.abs_index(gens_[g].perm[p]));
    for (std::size_t byte = 0; byte < 16; ++byte)
      for (std::size_t value = 0; value < 256; ++value) {
        PosMask m;
        for (std::size_t bit = 0; bit < 8; ++bit)
          if ((value >> bit) & 1) m |= image[byte * 8 + bit];
        table_[g][byte][value] = m;
      }
  }
}

PosMask WeylAction::apply_generator(std::size_t g, PosMask m) const noexcept {
  const auto& t = table_[g];
  PosMask out;
  for (std::size_t w = 0; w < 2; ++w) {
    std::uint64_t bits = m.words[w];
    for (std::size_t b = 0; bits; ++b, bits >>= 8)
      if (bits & 0xff) out |= t[w * 8 + b][bits & 0xff];
  }
  return out;
}

SubsystemOrbit WeylAction::orbit(Subsystem seed, const OrbitOptions& options) const {
  std::unordered_set<PosMask, PosMaskHash> seen{seed.positive};
  std::vector<PosMask> frontier{seed.positive};
  const std::size_t ngens = gens_.size();
  while (!frontier.empty()) {
    // Images are computed in parallel; deduplication is a sequential merge
    // in frontier order, so the result does not depend on scheduling.
    std::vector<PosMask> images(frontier.size() * ngens);
    constexpr std::size_t kChunk = 4096;
    const std::size_t chunks = (frontier.size() + kChunk - 1) / kChunk;
    parallel_for(chunks, options.threads, [&](std::size_t c) {
      const std::size_t end = std::min(frontier.size(), (c + 1) * kChunk);
      for (std::size_t i = c * kChunk; i < end; ++i)
        for (std::size_t g = 0; g < ngens; ++g) images[i * ngens + g] = apply_generator(g, frontier[i]);
    });
    std::vector<PosMask> next;
    for (const auto& m : images) {
      if (seen.insert(m).second) {
        if (seen.size() > options.ceiling)
          throw ResourceLimitError("orbit enumeration exceeded ceiling of " +
                                   std::to_string(options.ceiling) + " in " + rs_->key());
        next.push_back(m);
      }
    }
    frontier = std::move(next);
  }
  SubsystemOrbit out;
  out.members.reserve(seen.size());
  for (const auto& m : seen) out.members.push_back(Subsystem{m});
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::vector<std::pair<Subsystem, WeylElement>> WeylAction::orbit_with_words(
    Subsystem seed, const OrbitOptions& options) const {
  std::vector<std::pair<Subsystem, WeylElement>> out;
  std::unordered_map<PosMask, std::size_t, PosMaskHash> where;
  out.emplace_back(seed, WeylElement::identity(rs_->num_roots()));
  where.emplace(seed.positive, 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      const PosMask img = apply_generator(g, out[head].first.positive);
      if (where.count(img)) continue;
      if (out.size() >= options.ceiling)
        throw ResourceLimitError("orbit enumeration exceeded ceiling of " + std::to_string(options.ceiling));
      where.emplace(img, out.size());
      WeylElement w = gens_[g].compose(out[head].second);
      out.emplace_back(Subsystem{img}, std::move(w));
    }
  }
  return out;
}

SubsystemOrbit orbit_of_subsystem(const RootSystem& rs, Subsystem seed, const OrbitOptions& options) {
  return WeylAction(rs).orbit(seed, options);
}

bool are_conjugate(const RootSystem& rs, Subsystem s1, Subsystem s2, const OrbitOptions& options) {
  if (s1 == s2) return true;
  if (s1.positive_count() != s2.positive_count()) return false;
  for (auto cls : rs.classes_present()) {
    int c1 = 0, c2 = 0;
    s1.positive.for_each([&](std::size_t p) { c1 += rs.root_class(p) == cls; });
    s2.positive.for_each([&](std::size_t p) { c2 += rs.root_class(p) == cls; });
    if (c1 != c2) return false;
  }
  if (is_r_closed(rs, s1) && is_r_closed(rs, s2) && identify_type(rs, s1) != identify_type(rs, s2))
    return false;
  return WeylAction(rs).orbit(s1, options).contains(s2);
}

// ---------------------------------------------------------------------------
// Cache

namespace {

constexpr std::string_view kMagic = "EXSORB01";
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ostream& os, T v) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(buf), sizeof buf);
}

template <class T>
bool read_pod(std::istream& is, T& v) {
  unsigned char buf[sizeof(T)];
  if (!is.read(reinterpret_cast<char*>(buf), sizeof buf)) return false;
  v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(buf[i]) << (8 * i);
  return true;
}

void put_mask(std::ostream& os, PosMask m) {
  put(os, m.words[0]);
  put(os, m.words[1]);
}

bool get_mask(std::istream& is, PosMask& m) { return read_pod(is, m.words[0]) && read_pod(is, m.words[1]); }

std::uint64_t fnv1a(const std::vector<Subsystem>& members) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& s : members)
    for (auto w : s.positive.words)
      for (int i = 0; i < 8; ++i) {
        h ^= (w >> (8 * i)) & 0xff;
        h *= 0x100000001b3ull;
      }
  return h;
}

}  // namespace

void OrbitCache::write_file(const std::filesystem::path& file, const std::string& system_key, Subsystem seed,
                            const SubsystemOrbit& orbit) {
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write orbit cache file " + tmp);
    os.write(kMagic.data(), static_cast<std::streamsize>(kMagic.size()));
    put<std::uint32_t>(os, kVersion);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(system_key.size()));
    os.write(system_key.data(), static_cast<std::streamsize>(system_key.size()));
    put_mask(os, seed.positive);
    put<std::uint64_t>(os, orbit.members.size());
    for (const auto& m : orbit.members) put_mask(os, m.positive);
    put<std::uint64_t>(os, fnv1a(orbit.members));
    if (!os) throw std::runtime_error("short write on orbit cache file " + tmp);
  }
  std::filesystem::rename(tmp, file);
}

std::optional<SubsystemOrbit> OrbitCache::read_file(const std::filesystem::path& file,
                                                    const std::string& system_key, Subsystem seed) {
  std::ifstream is(file, std::ios::binary);
  if (!is) return std::nullopt;
  std::string magic(kMagic.size(), '\0');
  if (!is.read(magic.data(), static_cast<std::streamsize>(magic.size())) || magic != kMagic) return std::nullopt;
  std::uint32_t version = 0, key_len = 0;
  if (!read_pod(is, version) || version != kVersion || !read_pod(is, key_len) || key_len > 256) return std::nullopt;
  std::string key(key_len, '\0');
  if (!is.read(key.data(), key_len) || key != system_key) return std::nullopt;
  PosMask stored_seed;
  if (!get_mask(is, stored_seed) || stored_seed != seed.positive) return std::nullopt;
  std::uint64_t count = 0;
  if (!read_pod(is, count) || count == 0 || count > (std::uint64_t{1} << 32)) return std::nullopt;
  SubsystemOrbit orbit;
  orbit.members.resize(count);
  for (auto& m : orbit.members)
    if (!get_mask(is, m.positive)) return std::nullopt;
  std::uint64_t checksum = 0;
  if (!read_pod(is, checksum) || checksum != fnv1a(orbit.members)) return std::nullopt;
  if (!std::is_sorted(orbit.members.begin(), orbit.members.end()) || !orbit.contains(seed)) return std::nullopt;
  return orbit;
}

std::shared_ptr<const SubsystemOrbit> OrbitCache::get(const WeylAction& action, Subsystem seed,
                                                      const OrbitOptions& options) {
  const std::string key = action.system().key();
  std::shared_ptr<Slot> slot;
  {
    std::lock_guard lock(mu_);
    auto& s = slots_[{key, seed}];
    if (!s) s = std::make_shared<Slot>();
    slot = s;
  }
  std::call_once(slot->once, [&] {
    std::optional<std::filesystem::path> file;
    if (dir_) {
      file = *dir_ / (key + "_" + seed.positive.hex() + ".orb");
      if (auto loaded = read_file(*file, key, seed)) {
        if (loaded->size() > options.ceiling)
          throw ResourceLimitError("cached orbit exceeds ceiling of " + std::to_string(options.ceiling));
        slot->value = std::make_shared<const SubsystemOrbit>(std::move(*loaded));
        std::lock_guard lock(mu_);
        ++loaded_;
        return;
      }
    }
    auto orbit = std::make_shared<const SubsystemOrbit>(action.orbit(seed, options));
    if (file) {
      std::error_code ec;
      std::filesystem::create_directories(*dir_, ec);
      if (!ec) {
        try {
          write_file(*file, key, seed, *orbit);
        } catch (const std::exception&) {
          // An unwritable cache directory only costs recomputation.
        }
      }
    }
    slot->value = std::move(orbit);
    std::lock_guard lock(mu_);
    ++computed_;
  });
  if (slot->value->size() > options.ceiling)
    throw ResourceLimitError("memoised orbit exceeds ceiling of " + std::to_string(options.ceiling));
  return slot->value;
}

std::vector<OrbitCache::Entry> OrbitCache::inventory() const {
  std::lock_guard lock(mu_);
  std::vector<Entry> out;
  for (const auto& [k, slot] : slots_)
    if (slot->value) out.push_back({k.first, k.second, slot->value});
  return out;
}

std::size_t OrbitCache::computed() const {
  std::lock_guard lock(mu_);
  return computed_;
}

std::size_t OrbitCache::loaded_from_disk() const {
  std::lock_guard lock(mu_);
  return loaded_;
}

}  // namespace excsym
