// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "icx/rational.hpp"
#include "icx/zfunction.hpp"

namespace icx {

/// N(x): the integer points within open sup-distance 1 of x. Exactly
/// 2^k points for k fractional coordinates, listed lexicographically.
struct NeighborhoodResult {
  RatVec center;
  std::vector<ZPoint> points;
};

NeighborhoodResult integral_neighborhood(const RatVec& x);

/// Value and an optimal convex-combination witness for the local convex
/// extension at x. +inf when x is outside conv(dom f cap N(x)); the
/// coefficients, when present, are nonnegative, sum to 1, reconstruct x,
/// and their f-weighted sum equals the value.
struct ExtensionResult {
  ExtVal value;
  std::optional<std::vector<std::pair<ZPoint, Rat>>> coefficients;
};

ExtensionResult local_convex_extension(const ZFunction& f, const RatVec& x);

}  // namespace icx
