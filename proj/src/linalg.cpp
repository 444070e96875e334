#include "hk/linalg.hpp"

#include <utility>

namespace hk::linalg {

std::size_t row_reduce(Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < m.size(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[pivot_row]);
    const Rat inv = 1 / m[pivot_row][c];
    for (std::size_t j = c; j < cols; ++j) m[pivot_row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == pivot_row || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[pivot_row][j];
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::size_t rank(Matrix m) { return row_reduce(m); }

std::vector<Row> nullspace(Matrix rows, std::size_t cols) {
  const std::size_t r = row_reduce(rows);
  std::vector<std::size_t> pivot_col(r);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t c = 0;
    while (rows[i][c] == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Row> solve(Matrix a, Row b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && a[sel][c] == 0) ++sel;
    if (sel == n) return std::nullopt;
    std::swap(a[sel], a[c]);
    const Rat inv = 1 / a[c][c];
    for (std::size_t j = c; j <= n; ++j) a[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  Row x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

Rat determinant(Matrix m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace hk::linalg
