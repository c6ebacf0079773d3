#include "excsym/rootcore.hpp"

#include "excsym/exact_linalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace excsym {

// ---------------------------------------------------------------------------
// Names and parsing

std::string_view family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "E") return Family::E;
  if (s == "F") return Family::F;
  if (s == "G") return Family::G;
  if (s == "BC") return Family::BC;
  return std::nullopt;
}

std::string_view root_class_name(RootClass c) {
  switch (c) {
    case RootClass::Short: return "short";
    case RootClass::Long: return "long";
    case RootClass::Divisible: return "divisible";
  }
  return "?";
}

std::optional<RootClass> parse_root_class(std::string_view s) {
  if (s == "short") return RootClass::Short;
  if (s == "long") return RootClass::Long;
  if (s == "divisible") return RootClass::Divisible;
  return std::nullopt;
}

namespace {

bool valid_family_rank(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::BC: return rank >= 1;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

}  // namespace

LieType::LieType(std::vector<TypeFactor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    // Subsystem factors may be small: B1 and C1 name the short and long A1 of
    // a B or C parent.
    const bool ok = f.family == Family::B || f.family == Family::C ? f.rank >= 1
                                                                     : valid_family_rank(f.family, f.rank);
    if (!ok) {
      throw std::invalid_argument("invalid Lie type factor " + std::string(family_name(f.family)) +
                                  std::to_string(f.rank));
    }
  }
  std::sort(factors_.begin(), factors_.end());
}

int LieType::rank() const noexcept {
  int r = 0;
  for (const auto& f : factors_) r += f.rank;
  return r;
}

std::string LieType::label() const {
  if (factors_.empty()) return "regular";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    if (factors_[i].short_roots) out += '~';
    out += family_name(factors_[i].family);
    out += std::to_string(factors_[i].rank);
  }
  return out;
}

LieType LieType::parse(std::string_view s) {
  if (s == "regular" || s == "0" || s == "empty") return LieType{};
  std::vector<TypeFactor> factors;
  std::size_t pos = 0;
  auto fail = [&]() -> LieType {
    throw std::invalid_argument("malformed type label '" + std::string(s) + "'");
  };
  while (pos < s.size()) {
    TypeFactor f;
    if (s[pos] == '~') {
      f.short_roots = true;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= 'A' && s[pos] <= 'G') ++pos;
    auto fam = parse_family(s.substr(start, pos - start));
    if (!fam) return fail();
    f.family = *fam;
    start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (start == pos || pos - start > 2) return fail();
    f.rank = std::stoi(std::string(s.substr(start, pos - start)));
    factors.push_back(f);
    if (pos < s.size()) {
      if (s[pos] != 'x' || pos + 1 == s.size()) return fail();
      ++pos;
    }
  }
  if (factors.empty()) return fail();
  return LieType(std::move(factors));
}

// ---------------------------------------------------------------------------
// ExactVector

ExactVector ExactVector::from_integers(const std::vector<int>& coords) {
  std::vector<int> d(coords.size());
  std::transform(coords.begin(), coords.end(), d.begin(), [](int v) { return 2 * v; });
  return ExactVector(std::move(d));
}

ExactVector ExactVector::operator-() const {
  std::vector<int> d(d_.size());
  std::transform(d_.begin(), d_.end(), d.begin(), std::negate<>());
  return ExactVector(std::move(d));
}

ExactVector operator+(const ExactVector& a, const ExactVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("vector dimension mismatch");
  std::vector<int> d(a.dim());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.d_[i] + b.d_[i];
  return ExactVector(std::move(d));
}

ExactVector operator-(const ExactVector& a, const ExactVector& b) { return a + (-b); }

ExactVector operator*(int k, const ExactVector& v) {
  std::vector<int> d(v.dim());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = k * v.d_[i];
  return ExactVector(std::move(d));
}

std::string ExactVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (i) os << ", ";
    if (d_[i] % 2 == 0)
      os << d_[i] / 2;
    else
      os << d_[i] << "/2";
  }
  os << ')';
  return os.str();
}

std::int64_t inner4(const ExactVector& a, const ExactVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("vector dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    s += static_cast<std::int64_t>(a.doubled(i)) * b.doubled(i);
  return s;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

using Coords = std::vector<int>;  // doubled

struct RawSystem {
  std::size_t ambient = 0;
  std::vector<Coords> roots;
  std::vector<Coords> base;
};

Coords unit(std::size_t n, std::size_t i, int scale = 2) {
  Coords v(n, 0);
  v[i] = scale;
  return v;
}

Coords add(Coords a, const Coords& b, int sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}

// +-e_i +- e_j for i < j
void push_long_pairs(std::vector<Coords>& out, std::size_t n, std::size_t limit) {
  for (std::size_t i = 0; i < limit; ++i)
    for (std::size_t j = i + 1; j < limit; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Coords v(n, 0);
          v[i] = 2 * si;
          v[j] = 2 * sj;
          out.push_back(v);
        }
}

// e_1 - e_2, ..., e_count - e_{count+1}
std::vector<Coords> classical_chain(std::size_t n, std::size_t count) {
  std::vector<Coords> base;
  for (std::size_t i = 0; i < count; ++i) base.push_back(add(unit(n, i), unit(n, i + 1), -1));
  return base;
}

RawSystem raw_e8() {
  RawSystem r;
  r.ambient = 8;
  push_long_pairs(r.roots, 8, 8);
  for (int mask = 0; mask < 256; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    Coords v(8);
    for (int i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
    r.roots.push_back(v);
  }
  // Bourbaki numbering.
  r.base.push_back({1, -1, -1, -1, -1, -1, -1, 1});
  r.base.push_back(add(unit(8, 0), unit(8, 1)));
  for (std::size_t i = 0; i < 6; ++i) r.base.push_back(add(unit(8, i + 1), unit(8, i), -1));
  return r;
}

RawSystem raw_system(Family family, int rank) {
  const auto n = static_cast<std::size_t>(rank);
  RawSystem r;
  switch (family) {
    case Family::A: {
      r.ambient = n + 1;
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j)
          if (i != j) r.roots.push_back(add(unit(n + 1, i), unit(n + 1, j), -1));
      r.base = classical_chain(n + 1, n);
      break;
    }
    case Family::B:
    case Family::C:
    case Family::BC: {
      r.ambient = n;
      push_long_pairs(r.roots, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (int s : {1, -1}) {
          if (family != Family::C) r.roots.push_back(unit(n, i, s * 2));
          if (family != Family::B) r.roots.push_back(unit(n, i, s * 4));
        }
      r.base = classical_chain(n, n - 1);
      r.base.push_back(unit(n, n - 1, family == Family::C ? 4 : 2));
      break;
    }
    case Family::D: {
      r.ambient = n;
      push_long_pairs(r.roots, n, n);
      r.base = classical_chain(n, n - 1);
      r.base.push_back(add(unit(n, n - 2), unit(n, n - 1)));
      break;
    }
    case Family::G: {
      r.ambient = 3;
      // Plane x + y + z = 0: short e_i - e_j, long +-(2e_i - e_j - e_k).
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j)
          if (i != j) r.roots.push_back(add(unit(3, i), unit(3, j), -1));
        Coords v(3, -2);
        v[i] = 4;
        r.roots.push_back(v);
        for (auto& x : v) x = -x;
        r.roots.push_back(v);
      }
      r.base.push_back(add(unit(3, 0), unit(3, 1), -1));
      r.base.push_back({-4, 2, 2});
      break;
    }
    case Family::F: {
      r.ambient = 4;
      push_long_pairs(r.roots, 4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (int s : {1, -1}) r.roots.push_back(unit(4, i, 2 * s));
      for (int mask = 0; mask < 16; ++mask) {
        Coords v(4);
        for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
        r.roots.push_back(v);
      }
      r.base.push_back(add(unit(4, 1), unit(4, 2), -1));
      r.base.push_back(add(unit(4, 2), unit(4, 3), -1));
      r.base.push_back(unit(4, 3));
      r.base.push_back({1, -1, -1, -1});
      break;
    }
    case Family::E: {
      r = raw_e8();
      break;
    }
  }
  return r;
}

std::vector<int> base_coefficients(const linalg::IntMatrix& gram, const std::vector<Coords>& base,
                                   const Coords& v) {
  std::vector<std::int64_t> rhs(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < v.size(); ++k) s += static_cast<std::int64_t>(base[i][k]) * v[k];
    rhs[i] = s;
  }
  auto x = linalg::solve(gram, rhs);
  if (!x) throw std::logic_error("degenerate base");
  std::vector<int> c(base.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if ((*x)[i].denominator() != 1) throw std::logic_error("non-integral base coefficient");
    c[i] = static_cast<int>((*x)[i].numerator());
  }
  return c;
}

int sign_of(const std::vector<int>& c) {
  const bool nonneg = std::all_of(c.begin(), c.end(), [](int v) { return v >= 0; });
  const bool nonpos = std::all_of(c.begin(), c.end(), [](int v) { return v <= 0; });
  if (nonneg == nonpos) throw std::logic_error("root with mixed-sign base coefficients");
  return nonneg ? 1 : -1;
}

}  // namespace

RootSystem build_root_system(Family family, int rank) {
  if (!valid_family_rank(family, rank))
    throw std::invalid_argument("invalid root system " + std::string(family_name(family)) +
                                std::to_string(rank));

  RawSystem raw = raw_system(family, rank);
  linalg::IntMatrix gram(raw.base.size(), std::vector<std::int64_t>(raw.base.size()));
  for (std::size_t i = 0; i < raw.base.size(); ++i)
    for (std::size_t j = 0; j < raw.base.size(); ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < raw.ambient; ++k)
        s += static_cast<std::int64_t>(raw.base[i][k]) * raw.base[j][k];
      gram[i][j] = s;
    }

  struct Entry {
    Coords v;
    std::vector<int> c;
    int height;
  };
  std::vector<Entry> positives;
  for (const auto& v : raw.roots) {
    auto c = base_coefficients(gram, raw.base, v);
    if (family == Family::E) {
      // E6 and E7 are the E8 roots supported on the first `rank` simple roots.
      bool inside = true;
      for (std::size_t j = static_cast<std::size_t>(rank); j < c.size(); ++j) inside &= c[j] == 0;
      if (!inside) continue;
      c.resize(static_cast<std::size_t>(rank));
    }
    if (sign_of(c) < 0) continue;
    positives.push_back({v, c, std::accumulate(c.begin(), c.end(), 0)});
  }
  std::sort(positives.begin(), positives.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.c > b.c;
  });

  if (positives.size() > kMaxPositiveRoots)
    throw std::invalid_argument("root system too large: " + std::to_string(positives.size()) +
                                " positive roots");

  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.type_ = LieType::irreducible(family, rank);
  rs.ambient_ = raw.ambient;
  rs.positive_count_ = positives.size();
  const std::size_t P = positives.size();
  for (const auto& e : positives) {
    rs.roots_.push_back(ExactVector::from_doubled(e.v));
    rs.coeffs_.push_back(e.c);
  }
  for (const auto& e : positives) {
    Coords neg = e.v;
    for (auto& x : neg) x = -x;
    rs.roots_.push_back(ExactVector::from_doubled(neg));
  }
  for (std::size_t i = 0; i < rs.roots_.size(); ++i) rs.lookup_.emplace(rs.roots_[i].doubled_coords(), i);
  if (rs.lookup_.size() != rs.roots_.size()) throw std::logic_error("duplicate roots");

  for (std::size_t j = 0; j < static_cast<std::size_t>(rank); ++j) {
    if (rs.height(j) != 1 || rs.coeffs_[j][j] != 1) throw std::logic_error("base ordering broken");
    rs.base_.push_back(j);
  }

  std::set<std::int64_t> indivisible_norms;
  std::vector<bool> divisible(P, false);
  for (std::size_t p = 0; p < P; ++p) {
    rs.norm4_.push_back(inner4(rs.roots_[p], rs.roots_[p]));
    const auto& d = rs.roots_[p].doubled_coords();
    if (std::all_of(d.begin(), d.end(), [](int x) { return x % 2 == 0; })) {
      Coords half(d);
      for (auto& x : half) x /= 2;
      divisible[p] = rs.lookup_.count(half) > 0;
    }
    if (!divisible[p]) indivisible_norms.insert(rs.norm4_[p]);
  }
  if (indivisible_norms.size() > 2) throw std::logic_error("more than two indivisible root lengths");
  for (std::size_t p = 0; p < P; ++p) {
    if (divisible[p]) {
      rs.class_.push_back(RootClass::Divisible);
      rs.reduced_ = false;
    } else if (rs.norm4_[p] == *indivisible_norms.begin()) {
      rs.class_.push_back(RootClass::Short);
    } else {
      rs.class_.push_back(RootClass::Long);
    }
  }
  rs.mult_.assign(P, 1);

  rs.sum_table_.assign(P * P, -1);
  for (std::size_t p = 0; p < P; ++p)
    for (std::size_t q = 0; q < P; ++q)
      if (auto s = rs.find(rs.roots_[p] + rs.roots_[q]); s && *s < P)
        rs.sum_table_[p * P + q] = static_cast<std::int32_t>(*s);
  return rs;
}

RootSystem attach_multiplicities(const RootSystem& rs, const MultiplicityPattern& pattern) {
  const auto present = rs.classes_present();
  std::map<RootClass, int> assignment;
  if (pattern.uniform) {
    if (!pattern.by_class.empty())
      throw std::invalid_argument("multiplicity pattern mixes 'all' with per-class entries");
    for (auto c : present) assignment[c] = *pattern.uniform;
  } else {
    for (const auto& [cls, m] : pattern.by_class) {
      if (std::find(present.begin(), present.end(), cls) == present.end())
        throw std::invalid_argument("multiplicity pattern names root class '" +
                                    std::string(root_class_name(cls)) + "' absent from " +
                                    rs.lie_type().label());
      assignment[cls] = m;
    }
    for (auto c : present)
      if (!assignment.count(c))
        throw std::invalid_argument("multiplicity pattern leaves root class '" +
                                    std::string(root_class_name(c)) + "' unassigned");
  }
  for (const auto& [cls, m] : assignment)
    if (m <= 0) throw std::invalid_argument("multiplicities must be positive");

  RootSystem out = rs;
  for (std::size_t p = 0; p < out.positive_count_; ++p) out.mult_[p] = assignment.at(out.class_[p]);
  return out;
}

// ---------------------------------------------------------------------------
// Queries

std::optional<std::size_t> RootSystem::find(const ExactVector& v) const {
  auto it = lookup_.find(v.doubled_coords());
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::coefficient(std::size_t idx, std::size_t j) const {
  const int sign = is_positive(idx) ? 1 : -1;
  return sign * coeffs_.at(abs_index(idx)).at(j);
}

int RootSystem::height(std::size_t idx) const {
  const auto& c = coeffs_.at(abs_index(idx));
  const int h = std::accumulate(c.begin(), c.end(), 0);
  return is_positive(idx) ? h : -h;
}

std::vector<RootClass> RootSystem::classes_present() const {
  std::set<RootClass> s(class_.begin(), class_.end());
  return {s.begin(), s.end()};
}

std::optional<std::size_t> RootSystem::positive_sum(std::size_t p, std::size_t q) const {
  const auto v = sum_table_.at(p * positive_count_ + q);
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

int RootSystem::dimension() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

std::string RootSystem::key() const {
  std::string k = type_.label();
  for (auto c : classes_present()) {
    for (std::size_t p = 0; p < positive_count_; ++p)
      if (class_[p] == c) {
        k += '_';
        k += static_cast<char>(std::toupper(root_class_name(c)[0]));
        k += std::to_string(mult_[p]);
        break;
      }
  }
  return k;
}

ExactVector reflect(const RootSystem& rs, std::size_t mirror, const ExactVector& target) {
  const ExactVector& a = rs.root(mirror);
  const std::int64_t num = 2 * inner4(target, a);
  const std::int64_t den = inner4(a, a);
  std::vector<int> out(target.dim());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::int64_t t = num * a.doubled(i);
    if (t % den != 0) throw std::domain_error("reflection leaves the half-integer lattice");
    out[i] = target.doubled(i) - static_cast<int>(t / den);
  }
  return ExactVector::from_doubled(std::move(out));
}

bool base_coefficient_nonzero(const RootSystem& rs, std::size_t root, std::size_t j) {
  if (!rs.is_positive(root)) throw std::invalid_argument("base_coefficient_nonzero: root must be positive");
  if (j >= static_cast<std::size_t>(rs.rank())) throw std::out_of_range("base position out of range");
  return rs.coefficient(root, j) != 0;
}

}  // namespace excsym
