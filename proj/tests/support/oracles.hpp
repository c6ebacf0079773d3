#pragma once

// Brute-force reference computations for the tests. Nothing here goes
// through the orbit tables, kernels or conjugacy machinery of the library:
// reflections are recomputed from coordinates and Weyl groups are listed
// element by element.

#include "excsym/rootcore.hpp"
#include "excsym/rootset.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Coords = std::vector<int>;  // doubled coordinates

inline long dot(const Coords& a, const Coords& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

/// s_a(b) = b - 2(a,b)/(a,a) a, computed on doubled coordinates.
inline Coords reflect(const Coords& a, const Coords& b) {
  const long num = 2 * dot(a, b);
  const long den = dot(a, a);
  if (num % den != 0) throw std::logic_error("non-integral Cartan integer");
  const long k = num / den;
  Coords out(b);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(out[i] - k * a[i]);
  return out;
}

inline std::set<Coords> root_set(const excsym::RootSystem& rs) {
  std::set<Coords> out;
  for (std::size_t i = 0; i < rs.num_roots(); ++i) out.insert(rs.root(i).doubled_coords());
  return out;
}

/// Closure of the simple roots under the reflections they generate. With
/// `with_doubles` every doubled simple root that is a root seeds the closure
/// too, which is how the divisible roots of a BC system arise.
inline std::set<Coords> reflection_closure_of_base(const excsym::RootSystem& rs, bool with_doubles = false) {
  std::vector<Coords> simple;
  for (auto b : rs.base()) simple.push_back(rs.root(b).doubled_coords());
  std::set<Coords> seen(simple.begin(), simple.end());
  if (with_doubles)
    for (const auto& a : simple) {
      Coords d(a);
      for (auto& x : d) x *= 2;
      if (rs.find(excsym::ExactVector::from_doubled(d))) seen.insert(d);
    }
  std::vector<Coords> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const auto& v : frontier)
      for (const auto& a : simple) {
        auto w = reflect(a, v);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Every Weyl group element as a permutation of root indices.
inline std::vector<std::vector<std::uint16_t>> weyl_elements(const excsym::RootSystem& rs,
                                                              std::size_t limit = 2'000'000) {
  const std::size_t n = rs.num_roots();
  std::vector<std::vector<std::uint16_t>> gens;
  for (auto b : rs.base()) {
    std::vector<std::uint16_t> g(n);
    const Coords a = rs.root(b).doubled_coords();
    for (std::size_t i = 0; i < n; ++i) {
      const auto img = rs.find(excsym::ExactVector::from_doubled(reflect(a, rs.root(i).doubled_coords())));
      if (!img) throw std::logic_error("reflection left the root system");
      g[i] = static_cast<std::uint16_t>(*img);
    }
    gens.push_back(std::move(g));
  }
  std::vector<std::uint16_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint16_t>(i);
  std::set<std::vector<std::uint16_t>> seen{id};
  std::vector<std::vector<std::uint16_t>> all{id};
  for (std::size_t k = 0; k < all.size(); ++k)
    for (const auto& g : gens) {
      std::vector<std::uint16_t> h(n);
      for (std::size_t i = 0; i < n; ++i) h[i] = g[all[k][i]];
      if (seen.insert(h).second) {
        all.push_back(std::move(h));
        if (all.size() > limit) throw std::runtime_error("group too large for the oracle");
      }
    }
  return all;
}

/// Image of a set of positive roots under a permutation, folded back into
/// positive indices (subsystems are negation closed).
inline excsym::PosMask image(const excsym::RootSystem& rs, const std::vector<std::uint16_t>& w, excsym::PosMask m) {
  excsym::PosMask out;
  for (std::size_t p = 0; p < rs.num_positive(); ++p)
    if (m.test(p)) out.set(rs.abs_index(w[p]));
  return out;
}

inline int weighted(const excsym::RootSystem& rs, excsym::PosMask m) {
  int d = 0;
  for (std::size_t p = 0; p < rs.num_positive(); ++p)
    if (m.test(p)) d += rs.multiplicity(p);
  return d;
}

inline int min_intersection(const excsym::RootSystem& rs, const std::vector<std::vector<std::uint16_t>>& group,
                            excsym::PosMask phiX, excsym::PosMask psi) {
  int best = std::numeric_limits<int>::max();
  for (const auto& w : group) best = std::min(best, weighted(rs, phiX & image(rs, w, psi)));
  return best;
}

/// The Wright power inequality evaluated straight from its definition, with
/// the co-rank one subsystems taken as the supports of base-minus-one.
struct WrightOracle {
  bool holds = true;
  long slack = std::numeric_limits<long>::max();
};

inline WrightOracle wright_power(const excsym::RootSystem& rs, const std::vector<std::vector<std::uint16_t>>& group,
                                 excsym::PosMask phiX, int m) {
  WrightOracle out;
  const int dim_phi = weighted(rs, rs.all_positive());
  const int dim_x = weighted(rs, phiX);
  for (std::size_t j = 0; j < rs.base().size(); ++j) {
    excsym::PosMask psi;
    for (std::size_t p = 0; p < rs.num_positive(); ++p)
      if (rs.coefficient(p, j) == 0) psi.set(p);
    const long lhs = static_cast<long>(m - 1) * (dim_phi - weighted(rs, psi)) - 1;
    const long rhs = static_cast<long>(m) * (dim_x - min_intersection(rs, group, phiX, psi));
    out.slack = std::min(out.slack, lhs - rhs);
  }
  out.holds = out.slack >= 0;
  return out;
}

/// Does some choice of conjugates of the annihilators and some co-rank one
/// Psi = supp(base - j) conjugate give pairwise disjoint sets
/// (Phi+ - A_k) & (Phi+ - Psi)? Two annihilators only.
inline bool pair_witness_exists(const excsym::RootSystem& rs, const std::vector<std::vector<std::uint16_t>>& group,
                                excsym::PosMask a, excsym::PosMask b) {
  std::set<excsym::PosMask> ca, cb;
  for (const auto& w : group) {
    ca.insert(image(rs, w, a));
    cb.insert(image(rs, w, b));
  }
  const auto all = rs.all_positive();
  for (std::size_t j = 0; j < rs.base().size(); ++j) {
    excsym::PosMask psi;
    for (std::size_t p = 0; p < rs.num_positive(); ++p)
      if (rs.coefficient(p, j) == 0) psi.set(p);
    std::set<excsym::PosMask> psis;
    for (const auto& w : group) psis.insert(image(rs, w, psi));
    for (const auto& q : psis)
      for (const auto& x : ca)
        for (const auto& y : cb)
          if (((all - x - q) & (all - y - q)).empty()) return true;
  }
  return false;
}

}  // namespace oracle
