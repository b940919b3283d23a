// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "icx/rational.hpp"

namespace icx {

/// Dense rational matrix, row major.
using RatMat = std::vector<RatVec>;

/// Rank by exact Gaussian elimination. Does not modify the input.
int rank(RatMat m);

/// Solves the square system sum_j a[i][j] x_j = b[i].
/// Returns nullopt when the matrix is singular.
std::optional<RatVec> solve_square(RatMat a, RatVec b);

/// Basis of { x : a x = 0 }, one vector per free column.
std::vector<RatVec> nullspace(RatMat a);

/// True when v lies in the span of the given vectors.
bool in_span(const std::vector<RatVec>& basis, const RatVec& v);

}  // namespace icx
