#include "excsym/exact_linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace excsym::linalg {

// Comparisons go through numerator() because boost::rational (1.74) mixed
// with a plain integer recurses forever under C++20 rewritten operators.

namespace {

RatMatrix to_rational(const IntMatrix& rows) {
  RatMatrix out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<Rational> rr;
    rr.reserve(r.size());
    for (auto v : r) rr.emplace_back(v);
    out.push_back(std::move(rr));
  }
  return out;
}

}  // namespace

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].numerator() == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].numerator() == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const IntMatrix& rows) {
  auto m = to_rational(rows);
  return rref(m).size();
}

IntMatrix null_space(const IntMatrix& rows, std::size_t num_cols) {
  IntMatrix basis;
  if (rows.empty()) {
    for (std::size_t i = 0; i < num_cols; ++i) {
      std::vector<std::int64_t> e(num_cols, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  auto m = to_rational(rows);
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(num_cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  for (std::size_t free = 0; free < num_cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(num_cols, Rational(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
    std::int64_t lcm = 1;
    for (const auto& v : x) lcm = std::lcm(lcm, v.denominator());
    std::vector<std::int64_t> xi(num_cols);
    std::int64_t g = 0;
    for (std::size_t i = 0; i < num_cols; ++i) {
      xi[i] = x[i].numerator() * (lcm / x[i].denominator());
      g = std::gcd(g, xi[i]);
    }
    if (g > 1)
      for (auto& v : xi) v /= g;
    basis.push_back(std::move(xi));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const IntMatrix& a, const std::vector<std::int64_t>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
  RatMatrix m = to_rational(a);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("solve: matrix is not square");
    m[i].emplace_back(b[i]);
  }
  const auto pivots = rref(m);
  if (pivots.size() < n || pivots.back() >= n) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

}  // namespace excsym::linalg
