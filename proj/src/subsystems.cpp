#include "excsym/subsystems.hpp"

#include "excsym/exact_linalg.hpp"
#include "excsym/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace excsym {

namespace {

linalg::IntMatrix rows_of(const RootSystem& rs, Subsystem s) {
  linalg::IntMatrix rows;
  s.positive.for_each([&](std::size_t p) {
    const auto& d = rs.root(p).doubled_coords();
    rows.emplace_back(d.begin(), d.end());
  });
  return rows;
}

int popcount32(BaseSubset s) { return std::popcount(s); }

}  // namespace

Subsystem r_closure(const RootSystem& rs, Subsystem seed) {
  const auto normals = linalg::null_space(rows_of(rs, seed), rs.ambient_dim());
  Subsystem out;
  for (std::size_t p = 0; p < rs.num_positive(); ++p) {
    const auto& d = rs.root(p).doubled_coords();
    bool inside = true;
    for (const auto& n : normals) {
      std::int64_t dot = 0;
      for (std::size_t i = 0; i < d.size(); ++i) dot += n[i] * d[i];
      if (dot != 0) {
        inside = false;
        break;
      }
    }
    if (inside) out.positive.set(p);
  }
  return out;
}

bool is_r_closed(const RootSystem& rs, Subsystem s) { return r_closure(rs, s) == s; }

int span_rank(const RootSystem& rs, Subsystem s) { return static_cast<int>(linalg::rank(rows_of(rs, s))); }

Subsystem parabolic_subsystem(const RootSystem& rs, BaseSubset subset) {
  Subsystem out;
  for (std::size_t p = 0; p < rs.num_positive(); ++p) {
    bool inside = true;
    for (std::size_t j = 0; j < static_cast<std::size_t>(rs.rank()); ++j)
      if (!((subset >> j) & 1u) && rs.coefficient(p, j) != 0) inside = false;
    if (inside) out.positive.set(p);
  }
  return out;
}

Subsystem subsystem_from_roots(const RootSystem& rs, const std::vector<ExactVector>& roots) {
  Subsystem out;
  for (const auto& v : roots) {
    auto idx = rs.find(v);
    if (!idx) throw std::invalid_argument("not a root: " + v.str());
    out.positive.set(rs.abs_index(*idx));
  }
  return out;
}

std::vector<std::size_t> simple_roots_of(const RootSystem& rs, Subsystem s) {
  PosMask decomposable;
  const auto members = s.positive.indices();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a; b < members.size(); ++b)
      if (auto sum = rs.positive_sum(members[a], members[b]); sum && s.positive.test(*sum))
        decomposable.set(*sum);
  return (s.positive - decomposable).indices();
}

// ---------------------------------------------------------------------------
// Type identification

namespace {

std::int64_t max_indivisible_norm(const RootSystem& rs) {
  std::int64_t m = 0;
  for (std::size_t p = 0; p < rs.num_positive(); ++p)
    if (rs.root_class(p) != RootClass::Divisible) m = std::max(m, rs.norm4(p));
  return m;
}

TypeFactor name_component(const RootSystem& rs, const std::vector<std::size_t>& roots, int rank) {
  const Family parent = rs.family();
  const int n = static_cast<int>(roots.size());
  bool has_divisible = false;
  std::set<std::int64_t> norms;
  for (auto p : roots) {
    if (rs.root_class(p) == RootClass::Divisible) {
      // 2*beta counts as doubled only if beta itself is in the component.
      const auto& d = rs.root(p).doubled_coords();
      std::vector<int> half(d);
      for (auto& x : half) x /= 2;
      auto b = rs.find(ExactVector::from_doubled(half));
      if (b && std::find(roots.begin(), roots.end(), rs.abs_index(*b)) != roots.end()) {
        has_divisible = true;
        continue;
      }
    }
    norms.insert(rs.norm4(p));
  }

  auto fail = [&]() -> TypeFactor {
    throw std::logic_error("unrecognized root subsystem component: rank " + std::to_string(rank) + ", " +
                           std::to_string(n) + " positive roots");
  };

  if (has_divisible) {
    if (n != rank * rank + rank) return fail();
    return {Family::BC, rank, false};
  }

  if (norms.size() == 1) {
    const RootClass cls = rs.root_class(roots.front());
    if (rank == 1) {
      if ((parent == Family::B || parent == Family::BC) && cls == RootClass::Short) return {Family::B, 1, false};
      if ((parent == Family::C && cls == RootClass::Long) || cls == RootClass::Divisible)
        return {Family::C, 1, false};
    }
    const bool tilde = (parent == Family::F || parent == Family::G) && *norms.begin() < max_indivisible_norm(rs);
    if (n == rank * (rank + 1) / 2) return {Family::A, rank, tilde};
    if (rank >= 4 && n == rank * (rank - 1)) return {Family::D, rank, tilde};
    if ((rank == 6 && n == 36) || (rank == 7 && n == 63) || (rank == 8 && n == 120))
      return {Family::E, rank, false};
    return fail();
  }

  if (norms.size() != 2) return fail();
  if (rank == 2 && n == 6) return {Family::G, 2, false};
  if (rank == 4 && n == 24) return {Family::F, 4, false};
  if (n != rank * rank) return fail();
  const std::int64_t short_norm = *norms.begin();
  int n_short = 0;
  for (auto p : roots) n_short += rs.norm4(p) == short_norm;
  const int n_long = n - n_short;
  if (rank == 2) {
    if (parent == Family::C) return {Family::C, 2, false};
    if (parent == Family::BC) {
      // Short roots e_i give B2, doubled roots 2e_i give C2.
      const bool short_from_parent_short = std::any_of(
          roots.begin(), roots.end(), [&](std::size_t p) { return rs.root_class(p) == RootClass::Short; });
      return {short_from_parent_short ? Family::B : Family::C, 2, false};
    }
    return {Family::B, 2, false};
  }
  if (n_short == rank) return {Family::B, rank, false};
  if (n_long == rank) return {Family::C, rank, false};
  return fail();
}

}  // namespace

LieType identify_type(const RootSystem& rs, Subsystem s) {
  const auto members = s.positive.indices();
  if (members.empty()) return LieType{};

  std::vector<std::size_t> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root_of = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (inner4(rs.root(members[a]), rs.root(members[b])) != 0) parent[root_of(a)] = root_of(b);

  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t a = 0; a < members.size(); ++a) components[root_of(a)].push_back(members[a]);

  std::vector<TypeFactor> factors;
  for (const auto& [_, roots] : components) {
    Subsystem comp;
    for (auto p : roots) comp.positive.set(p);
    const int rank = static_cast<int>(simple_roots_of(rs, comp).size());
    factors.push_back(name_component(rs, roots, rank));
  }
  return LieType(std::move(factors));
}

int dim_subsystem(const RootSystem& rs, Subsystem s) {
  int d = 0;
  s.positive.for_each([&](std::size_t p) { d += rs.multiplicity(p); });
  return d;
}

// ---------------------------------------------------------------------------
// Conjugacy classes of base subsets

namespace {

// -w0 of the parabolic subgroup W_L as a permutation of base positions in L.
std::vector<std::size_t> opposition(const RootSystem& rs, const std::vector<WeylElement>& gens, BaseSubset L) {
  WeylElement w = WeylElement::identity(rs.num_roots());
  const std::size_t r = static_cast<std::size_t>(rs.rank());
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < r; ++i) {
      if (!((L >> i) & 1u) || !rs.is_positive(w(rs.base()[i]))) continue;
      w = w.compose(gens[i]);
      grew = true;
    }
  }
  std::vector<std::size_t> opp(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    if (!((L >> i) & 1u)) continue;
    const std::size_t img = rs.negate(w(rs.base()[i]));
    const auto pos = std::find(rs.base().begin(), rs.base().end(), img);
    if (pos == rs.base().end()) throw std::logic_error("opposition does not preserve the base");
    opp[i] = static_cast<std::size_t>(pos - rs.base().begin());
  }
  return opp;
}

std::string with_primes(const std::string& label, int k) { return label + std::string(static_cast<std::size_t>(k), '\''); }

std::vector<AnnihilatorType> build_types(const RootSystem& rs, bool corank_one_only) {
  const int r = rs.rank();
  const BaseSubset full = (BaseSubset{1} << r) - 1;
  std::vector<AnnihilatorType> out;
  for (const auto& cls : base_subset_classes(rs)) {
    const BaseSubset J = cls.front();
    if (J == full) continue;
    if (corank_one_only && popcount32(J) != r - 1) continue;
    AnnihilatorType t;
    t.base_subset = J;
    t.representative = parabolic_subsystem(rs, J);
    t.lie_type = identify_type(rs, t.representative);
    t.dim = dim_subsystem(rs, t.representative);
    t.corank = r - popcount32(J);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const AnnihilatorType& a, const AnnihilatorType& b) {
    const auto ka = std::make_tuple(a.lie_type.rank(), a.lie_type.label(), a.dim, a.representative);
    const auto kb = std::make_tuple(b.lie_type.rank(), b.lie_type.label(), b.dim, b.representative);
    return ka < kb;
  });
  std::map<std::string, int> seen, total;
  for (const auto& t : out) ++total[t.lie_type.label()];
  for (auto& t : out) {
    const auto base = t.lie_type.label();
    t.label = total[base] > 1 ? with_primes(base, ++seen[base]) : base;
  }
  return out;
}

}  // namespace

std::vector<std::vector<BaseSubset>> base_subset_classes(const RootSystem& rs) {
  const auto gens = simple_reflections(rs);
  const int r = rs.rank();
  const BaseSubset count = BaseSubset{1} << r;
  std::vector<std::vector<std::size_t>> opp(count);
  for (BaseSubset L = 0; L < count; ++L) opp[L] = opposition(rs, gens, L);

  std::vector<int> cls(count, -1);
  std::vector<std::vector<BaseSubset>> classes;
  for (BaseSubset start = 0; start < count; ++start) {
    if (cls[start] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    classes.emplace_back();
    std::vector<BaseSubset> stack{start};
    cls[start] = id;
    while (!stack.empty()) {
      const BaseSubset J = stack.back();
      stack.pop_back();
      classes[id].push_back(J);
      for (int s = 0; s < r; ++s) {
        if ((J >> s) & 1u) continue;
        const BaseSubset L = J | (BaseSubset{1} << s);
        BaseSubset K = 0;
        for (int j = 0; j < r; ++j)
          if ((J >> j) & 1u) K |= BaseSubset{1} << opp[L][static_cast<std::size_t>(j)];
        if (cls[K] < 0) {
          cls[K] = id;
          stack.push_back(K);
        }
      }
    }
    std::sort(classes[id].begin(), classes[id].end());
  }
  return classes;
}

std::vector<AnnihilatorType> corank_one_closed(const RootSystem& rs) {
  auto types = build_types(rs, true);
  // The closure of base-minus-one computed by linear algebra must agree with
  // the coefficient-support description used to build the representative.
  for (const auto& t : types) {
    Subsystem seed;
    for (int j = 0; j < rs.rank(); ++j)
      if ((t.base_subset >> j) & 1u) seed.positive.set(rs.base()[static_cast<std::size_t>(j)]);
    if (r_closure(rs, seed) != t.representative) throw std::logic_error("closure mismatch for co-rank one subsystem");
  }
  return types;
}

std::vector<AnnihilatorType> annihilator_catalog(const RootSystem& rs) { return build_types(rs, false); }

const AnnihilatorType& find_annihilator(const std::vector<AnnihilatorType>& catalog, const std::string& label) {
  for (const auto& t : catalog)
    if (t.label == label) return t;
  // Accept a canonical spelling of the type, e.g. "C1xA1" for "A1xC1".
  LieType wanted;
  try {
    wanted = LieType::parse(label);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed annihilator type '" + label + "'");
  }
  const AnnihilatorType* hit = nullptr;
  int hits = 0;
  for (const auto& t : catalog)
    if (t.lie_type == wanted) {
      hit = &t;
      ++hits;
    }
  if (hits == 1) return *hit;
  if (hits > 1)
    throw std::invalid_argument("annihilator type '" + label +
                                "' names several conjugacy classes; use a primed label");
  std::string known;
  for (const auto& t : catalog) known += (known.empty() ? "" : ", ") + t.label;
  throw std::invalid_argument("no annihilator of type '" + label + "' (available: " + known + ")");
}

}  // namespace excsym
