#pragma once

#include <vector>

#include "shadowkit/errors.hpp"

namespace shadowkit {

template <class K>
using Matrix = std::vector<std::vector<K>>;

/// Basis of the right nullspace {x : M x = 0} by Gauss-Jordan elimination.
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> m, std::size_t ncols) {
  std::size_t rows = m.size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    K li = inv(m[r][c]);
    for (auto& x : m[r]) x = x * li;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      K f = m[i][c];
      for (std::size_t j = 0; j < ncols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(ncols, K(0));
    v[f] = K(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
K det3(const Matrix<K>& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

template <class K>
Matrix<K> inverse3(const Matrix<K>& a) {
  K d = det3(a);
  if (is_zero(d)) throw DivisionByZero("singular 3x3 matrix");
  K di = inv(d);
  Matrix<K> r(3, std::vector<K>(3, K(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r[i][j] = (a[i1][j1] * a[i2][j2] - a[i1][j2] * a[i2][j1]) * di;
    }
  return r;
}

}  // namespace shadowkit
