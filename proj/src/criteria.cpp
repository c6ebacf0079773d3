#include "excsym/criteria.hpp"

#include "excsym/parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace excsym {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void check_inside(const RootSystem& rs, const Subsystem& s, const char* what) {
  if (!s.positive.subset_of(rs.all_positive()))
    throw std::invalid_argument(std::string(what) + ": subsystem has bits outside the positive roots");
}

// Upper bound |W| / |W_S| on the orbit size of s, or 0 when s has no
// recognisable type.
std::uint64_t orbit_size_bound(const Engine& e, Subsystem s) {
  try {
    return e.weyl_order() / weyl_group_order(identify_type(e.system(), s));
  } catch (const std::exception&) {
    return 0;
  }
}

// Chunked, parallel min of weighted |query & member| over an orbit. The chunk
// results are reduced in chunk order, so the outcome is independent of the
// thread count.
int orbit_min(const Engine& e, PosMask query, const SubsystemOrbit& orbit) {
  static_assert(sizeof(Subsystem) == sizeof(PosMask));
  const auto* data = reinterpret_cast<const PosMask*>(orbit.members.data());
  const std::span<const PosMask> all(data, orbit.members.size());
  constexpr std::size_t kChunk = 1 << 15;
  const std::size_t chunks = (all.size() + kChunk - 1) / kChunk;
  std::vector<kernels::MinResult> partial(chunks);
  parallel_for(chunks, e.options().orbit.threads, [&](std::size_t c) {
    const auto part = all.subspan(c * kChunk, std::min(kChunk, all.size() - c * kChunk));
    partial[c] = kernels::min_weighted_intersection(query, part, e.weights());
  });
  int best = std::numeric_limits<int>::max();
  for (const auto& r : partial) best = std::min(best, r.value);
  return best;
}

void validate_tuple(const Engine& e, const std::vector<Subsystem>& annihilators) {
  if (annihilators.size() < 2)
    throw std::invalid_argument("the Wright condition needs at least two annihilators");
  for (const auto& a : annihilators) check_inside(e.system(), a, "wright");
}

}  // namespace

std::uint64_t weyl_group_order(const LieType& t) {
  std::uint64_t order = 1;
  for (const auto& f : t.factors()) {
    const int n = f.rank;
    switch (f.family) {
      case Family::A: order *= factorial(n + 1); break;
      case Family::B:
      case Family::C:
      case Family::BC: order *= (std::uint64_t{1} << n) * factorial(n); break;
      case Family::D: order *= (std::uint64_t{1} << (n - 1)) * factorial(n); break;
      case Family::E: order *= n == 6 ? 51840 : n == 7 ? 2903040 : 696729600; break;
      case Family::F: order *= 1152; break;
      case Family::G: order *= 12; break;
    }
  }
  return order;
}

Engine::Engine(RootSystem rs, EngineOptions options, std::shared_ptr<OrbitCache> cache)
    : rs_(std::move(rs)),
      options_(options),
      cache_(cache ? std::move(cache) : std::make_shared<OrbitCache>()),
      action_(rs_) {
  catalog_ = annihilator_catalog(rs_);
  psi_classes_ = corank_one_closed(rs_);
  for (auto cls : rs_.classes_present()) {
    auto& k = weights_.count;
    for (std::size_t p = 0; p < rs_.num_positive(); ++p)
      if (rs_.root_class(p) == cls) {
        weights_.masks[k].set(p);
        weights_.weights[k] = rs_.multiplicity(p);
      }
    ++k;
  }
  dim_phi_ = rs_.dimension();
  weyl_order_ = group_order(rs_);
}

std::shared_ptr<const SubsystemOrbit> Engine::orbit(Subsystem seed) const {
  return cache_->get(action_, seed, options_.orbit);
}

int min_intersection_dim(const Engine& e, Subsystem phiX, Subsystem psi, OrbitSide side) {
  check_inside(e.system(), phiX, "min_intersection_dim");
  check_inside(e.system(), psi, "min_intersection_dim");
  if (side == OrbitSide::Auto) {
    const auto bx = orbit_size_bound(e, phiX);
    const auto bp = orbit_size_bound(e, psi);
    side = (bx != 0 && (bp == 0 || bx < bp)) ? OrbitSide::PhiX : OrbitSide::Psi;
  }
  // dim(phiX & w psi) = dim(w^-1 phiX & psi), so either orbit may be swept.
  if (side == OrbitSide::Psi) return orbit_min(e, phiX.positive, *e.orbit(psi));
  return orbit_min(e, psi.positive, *e.orbit(phiX));
}

WrightReport wright_tuple(const Engine& e, const std::vector<Subsystem>& annihilators) {
  validate_tuple(e, annihilators);
  const auto& rs = e.system();
  WrightReport report;
  report.m = static_cast<int>(annihilators.size());
  report.holds = true;
  bool first = true;
  for (const auto& psi : e.psi_classes()) {
    WrightTerm term;
    term.psi_label = psi.label;
    term.dim_psi = psi.dim;
    term.lhs = static_cast<long>(report.m - 1) * (e.dim_phi() - psi.dim) - 1;
    std::map<Subsystem, int> memo;
    for (const auto& a : annihilators) {
      auto it = memo.find(a);
      if (it == memo.end())
        it = memo.emplace(a, min_intersection_dim(e, a, psi.representative, e.options().side)).first;
      term.min_intersections.push_back(it->second);
      term.rhs += dim_subsystem(rs, a) - it->second;
    }
    term.slack = term.lhs - term.rhs;
    if (term.slack < 0) report.holds = false;
    if (first || term.slack < report.slack) {
      report.slack = term.slack;
      report.binding_psi = term.psi_label;
      first = false;
    }
    report.terms.push_back(std::move(term));
  }
  return report;
}

WrightReport wright_power(const Engine& e, Subsystem phiX, int m) {
  if (m < 2) throw std::invalid_argument("wright_power: m must be at least 2");
  return wright_tuple(e, std::vector<Subsystem>(static_cast<std::size_t>(m), phiX));
}

ReducedReport wright_reduced(const Engine& e, Subsystem phiX, int m) {
  const auto& rs = e.system();
  if (m < 2) throw std::invalid_argument("wright_reduced: m must be at least 2");
  check_inside(rs, phiX, "wright_reduced");
  for (std::size_t p = 0; p < rs.num_positive(); ++p)
    if (rs.multiplicity(p) != 1)
      throw std::invalid_argument("wright_reduced applies only to multiplicity-one systems");

  const std::size_t r = rs.base().size();
  const std::size_t P = rs.num_positive();
  std::vector<int> x1(r, 0);
  for (std::size_t p = 0; p < P; ++p)
    for (std::size_t j = 0; j < r; ++j)
      if (rs.coefficient(p, j) != 0) ++x1[j];

  // max over conjugates X' of the number of roots of X' involving alpha_j,
  // counted root by root from base coefficients.
  const auto orbit = e.orbit(phiX);
  std::vector<int> max_b1(r, 0);
  std::vector<int> counts(r);
  for (const auto& member : orbit->members) {
    std::fill(counts.begin(), counts.end(), 0);
    member.positive.for_each([&](std::size_t p) {
      for (std::size_t j = 0; j < r; ++j)
        if (rs.coefficient(p, j) != 0) ++counts[j];
    });
    for (std::size_t j = 0; j < r; ++j) max_b1[j] = std::max(max_b1[j], counts[j]);
  }

  ReducedReport report;
  report.m = m;
  report.holds = true;
  for (std::size_t j = 0; j < r; ++j) {
    ReducedTerm t{j, x1[j], max_b1[j], static_cast<long>(m - 1) * x1[j] - static_cast<long>(m) * max_b1[j] - 1};
    if (t.slack < 0) report.holds = false;
    if (j == 0 || t.slack < report.slack) {
      report.slack = t.slack;
      report.binding_position = j;
    }
    report.terms.push_back(t);
  }
  return report;
}

bool dimension_singularity(const RootSystem& rs, Subsystem phiX, int m, int dim_p) {
  if (m < 1) throw std::invalid_argument("dimension_singularity: m must be positive");
  check_inside(rs, phiX, "dimension_singularity");
  return static_cast<long>(m) * (rs.dimension() - dim_subsystem(rs, phiX)) < dim_p;
}

std::vector<PosMask> witness_intersection_sets(const RootSystem& rs, const Witness& w) {
  std::vector<PosMask> sets;
  const PosMask outside_psi = rs.all_positive() - w.psi.positive;
  for (const auto& a : w.conjugated_annihilators) sets.push_back(outside_psi - a.positive);
  return sets;
}

bool verify_witness(const RootSystem& rs, const Witness& w, DisjointnessMode mode) {
  if (w.conjugated_annihilators.size() < 2 || w.m != static_cast<int>(w.conjugated_annihilators.size()))
    throw std::invalid_argument("witness needs m >= 2 annihilators and a matching m");
  check_inside(rs, w.psi, "verify_witness");
  for (const auto& a : w.conjugated_annihilators) check_inside(rs, a, "verify_witness");
  if (!is_r_closed(rs, w.psi) || span_rank(rs, w.psi) != rs.rank() - 1)
    throw std::invalid_argument("witness psi is not a closed co-rank one subsystem");

  const auto sets = witness_intersection_sets(rs, w);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const PosMask overlap = sets[i] & sets[j];
      if (mode == DisjointnessMode::RootSets) {
        if (!overlap.empty()) return false;
      } else {
        int dim = 0;
        overlap.for_each([&](std::size_t p) { dim += rs.multiplicity(p); });
        if (dim != 0) return false;
      }
    }
  return true;
}

std::optional<Witness> witness_search(const Engine& e, const std::vector<Subsystem>& annihilators) {
  validate_tuple(e, annihilators);
  const auto& rs = e.system();
  const std::size_t m = annihilators.size();

  std::vector<std::shared_ptr<const SubsystemOrbit>> orbits;
  for (const auto& a : annihilators) orbits.push_back(e.orbit(a));

  for (const auto& psi : e.psi_classes()) {
    const PosMask outside_psi = rs.all_positive() - psi.representative.positive;
    // Distinct candidate sets per slot, in orbit order, with the first
    // conjugate that produced each.
    std::vector<std::vector<PosMask>> sets(m);
    std::vector<std::vector<Subsystem>> sources(m);
    for (std::size_t k = 0; k < m; ++k) {
      std::unordered_set<PosMask, PosMaskHash> seen;
      for (const auto& member : orbits[k]->members) {
        const PosMask s = outside_psi - member.positive;
        if (seen.insert(s).second) {
          sets[k].push_back(s);
          sources[k].push_back(member);
        }
      }
    }

    std::vector<std::size_t> chosen(m);
    std::function<bool(std::size_t, PosMask)> extend = [&](std::size_t k, PosMask used) {
      if (k == m) return true;
      const std::span<const PosMask> batch(sets[k]);
      for (std::size_t pos = 0; pos < batch.size();) {
        const auto hit = kernels::first_disjoint(used, batch.subspan(pos));
        if (hit == kernels::npos) return false;
        chosen[k] = pos + hit;
        if (extend(k + 1, used | batch[chosen[k]])) return true;
        pos = chosen[k] + 1;
      }
      return false;
    };
    if (extend(0, PosMask{})) {
      Witness w;
      w.m = static_cast<int>(m);
      w.psi = psi.representative;
      for (std::size_t k = 0; k < m; ++k) {
        w.conjugated_annihilators.push_back(sources[k][chosen[k]]);
        w.intersection_sets.push_back(sets[k][chosen[k]]);
      }
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace excsym
