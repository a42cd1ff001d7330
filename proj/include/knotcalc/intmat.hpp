#pragma once

#include <cstddef>
#include <vector>

#include "knotcalc/bigint.hpp"

namespace knotcalc {

/// Dense integer matrix, row major. Rows may be empty; all rows must have
/// equal length.
using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix identity_matrix(std::size_t n);

/// a (m x k) times b (k x n); throws std::invalid_argument on shape mismatch.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant of a square matrix (fraction-free elimination).
BigInt mat_det(IntMatrix m);

std::size_t row_count(const IntMatrix& m);
std::size_t col_count(const IntMatrix& m);
bool is_rectangular(const IntMatrix& m);

}  // namespace knotcalc
