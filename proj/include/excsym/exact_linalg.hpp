#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace excsym::linalg {

using Rational = boost::rational<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

/// Rank of the row space of an integer matrix.
std::size_t rank(const IntMatrix& rows);

/// Integer basis of {x : rows * x = 0}. Each returned vector is primitive
/// (gcd of entries 1), so membership tests stay in integer arithmetic.
IntMatrix null_space(const IntMatrix& rows, std::size_t num_cols);

/// Solves square system a * x = b exactly; nullopt when a is singular.
std::optional<std::vector<Rational>> solve(const IntMatrix& a, const std::vector<std::int64_t>& b);

}  // namespace excsym::linalg
