#include "knotcalc/intmat.hpp"

#include <stdexcept>
#include <utility>

namespace knotcalc {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::size_t row_count(const IntMatrix& m) { return m.size(); }

std::size_t col_count(const IntMatrix& m) { return m.empty() ? 0 : m[0].size(); }

bool is_rectangular(const IntMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m[0].size()) return false;
  return true;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (!is_rectangular(a) || !is_rectangular(b))
    throw std::invalid_argument("mat_mul: ragged matrix");
  const std::size_t m = row_count(a), k = col_count(a), n = col_count(b);
  if (k != row_count(b)) throw std::invalid_argument("mat_mul: shape mismatch");
  IntMatrix c(m, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

BigInt mat_det(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("mat_det: matrix not square");
  if (n == 0) return 1;
  // Bareiss: every division below is exact.
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign < 0 ? BigInt(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

}  // namespace knotcalc
