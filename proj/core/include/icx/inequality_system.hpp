// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "icx/rational.hpp"

namespace icx {

/// One inequality: coeffs . p <= rhs.
struct LinRow {
  RatVec coeffs;
  Rat rhs;

  bool satisfied_by(const RatVec& p) const { return dot(coeffs, p) <= rhs; }
};

/// Finite system A p <= b over Q^dim.
struct IneqSystem {
  int dim = 0;
  std::vector<LinRow> rows;

  IneqSystem() = default;
  explicit IneqSystem(int d) : dim(d) {}

  void add_row(RatVec coeffs, Rat rhs);
  bool satisfied_by(const RatVec& p) const;
  std::string str() const;
};

/// Scales a row so its coefficients are integral with gcd 1 (positive scale
/// only; the zero row is left untouched).
LinRow normalize_row(LinRow row);

/// Normalizes every row, then deduplicates: identical coefficient vectors
/// keep only the tightest rhs. Row order is canonical (lexicographic).
IneqSystem normalized(const IneqSystem& sys);

}  // namespace icx
