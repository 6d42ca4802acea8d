#include "kshadow/linalg.hpp"

#include <stdexcept>

namespace kshadow {

namespace {

std::size_t width(const LaurentMatrix& m) { return m.empty() ? 0 : m[0].size(); }

// Smallest nonzero candidate keeps intermediate growth down.
int choose_pivot(const LaurentMatrix& m, std::size_t col, std::size_t from) {
  int best = -1;
  for (std::size_t r = from; r < m.size(); ++r)
    if (!m[r][col].is_zero() && (best < 0 || m[r][col].size() < m[best][col].size())) best = static_cast<int>(r);
  return best;
}

}  // namespace

LaurentPoly determinant(LaurentMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  if (width(m) != n) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t rank = m[0][0].rank();
  LaurentPoly prev = LaurentPoly::constant(rank, 1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const int p = choose_pivot(m, k, k);
    if (p < 0) return LaurentPoly(rank);
    if (static_cast<std::size_t>(p) != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = LaurentPoly(rank);
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int fraction_field_rank(LaurentMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = width(m);
  const std::size_t rank_dim = m[0][0].rank();
  LaurentPoly prev = LaurentPoly::constant(rank_dim, 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    const int p = choose_pivot(m, c, r);
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = divide_exact(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
      m[i][c] = LaurentPoly(rank_dim);
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace kshadow
