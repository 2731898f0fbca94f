#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace csvqe::gf2 {

using Vec = std::vector<std::uint8_t>;
using Matrix = std::vector<Vec>;

/// In-place reduced row echelon form over GF(2) with leftmost-column
/// pivoting; returns the pivot columns in order. Deterministic, so every
/// basis derived from it is reproducible across runs.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {v : M v = 0 (mod 2)}, one kernel vector per row. Free columns
/// are enumerated in ascending order.
Matrix kernel_basis(const Matrix& m);

/// Coefficients c with sum_i c_i * rows[i] == target (mod 2), if solvable.
/// Free coefficients are set to 0.
std::optional<Vec> solve_combination(const Matrix& rows, const Vec& target);

/// Indices (ascending) of a maximal linearly independent subset, keeping the
/// earliest row of every dependent family.
std::vector<std::size_t> independent_rows(const Matrix& rows);

}  // namespace csvqe::gf2
