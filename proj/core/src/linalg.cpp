// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#include "icx/linalg.hpp"

#include <cstddef>

namespace icx {

namespace {

// Row echelon form in place; returns pivot columns. cols limits elimination
// to the leading block so augmented matrices can share the routine.
std::vector<int> echelon(RatMat& m, int cols) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(m.size());
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int r = row; r < rows; ++r) {
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[row], m[pr]);
    const Rat inv = Rat(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rat f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(RatMat m) {
  if (m.empty()) return 0;
  return static_cast<int>(echelon(m, static_cast<int>(m[0].size())).size());
}

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw std::invalid_argument("solve_square: not square");
    a[i].push_back(b[i]);
  }
  const auto pivots = echelon(a, n);
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
  return x;
}

std::vector<RatVec> nullspace(RatMat a) {
  if (a.empty()) return {};
  const int n = static_cast<int>(a[0].size());
  const auto pivots = echelon(a, n);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(n, Rat(0));
    v[free] = 1;
    // Pivot row i has leading 1 at pivots[i]; back out its value.
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const std::vector<RatVec>& basis, const RatVec& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  RatMat m = basis;
  const int r0 = rank(m);
  m.push_back(v);
  return rank(m) == r0;
}

}  // namespace icx
