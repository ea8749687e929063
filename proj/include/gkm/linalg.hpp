#pragma once

#include <optional>
#include <vector>

#include "gkm/polyring.hpp"

namespace gkm {

using RatMatrix = std::vector<std::vector<Rational>>;
using PolyMatrix = std::vector<std::vector<Polynomial>>;

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

// Gaussian elimination over Q. Returns the solution only when it is unique.
std::optional<std::vector<Rational>> solve_unique(RatMatrix a, std::vector<Rational> b, SolveStatus* status = nullptr);
std::optional<RatMatrix> invert(RatMatrix a);
std::size_t rank(RatMatrix a);

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
bool is_identity(const PolyMatrix& m);

// Inverse of a square matrix whose (r, c) entry is homogeneous of degree
// (row_deg[r] - col_deg[c]) / 2 and vanishes when that is negative. After
// grouping by degree it is block lower triangular with constant diagonal
// blocks, so the inverse is polynomial whenever those blocks are invertible.
std::optional<PolyMatrix> graded_inverse(const PolyMatrix& m, const std::vector<int>& row_deg,
                                         const std::vector<int>& col_deg);

}  // namespace gkm
