// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "icx/extension.hpp"
#include "icx/rational.hpp"
#include "icx/zfunction.hpp"

namespace icx {

/// A rational point of conv(S) that escapes conv(S cap N(x)).
struct SetViolation {
  RatVec point;
};

/// A domain pair at sup-distance 2 whose midpoint breaks the local convex
/// extension bound: extension_value > pair_average.
struct PairViolation {
  ZPoint x;
  ZPoint y;
  RatVec midpoint;
  ExtVal extension_value;
  Rat pair_average;
};

struct IcVerdict {
  bool is_ic = false;
  std::optional<SetViolation> set_witness;
  std::optional<PairViolation> pair_witness;
};

/// Decides integral convexity of a set by checking, cell by unit cell C,
/// that conv(S) cap C is contained in conv(S cap C). On violation the
/// witness is the lexicographically smallest violating midpoint of a
/// domain pair at sup-distance 2 when one exists, otherwise the smallest
/// violating vertex of a cell polytope.
IcVerdict is_integrally_convex_set(const ZSet& s);

/// A function is integrally convex iff its domain is an integrally convex
/// set and every domain pair at sup-distance 2 satisfies the midpoint
/// condition. A non-IC domain yields the domain's set witness; otherwise
/// the lexicographically smallest violating pair is reported.
IcVerdict is_integrally_convex_function(const ZFunction& f);

/// Local optimality over the 3^n - 1 unit neighborhood, which certifies
/// global optimality for integrally convex f. check_ic re-runs the checker
/// first and throws if f is not integrally convex.
bool is_global_minimizer(const ZFunction& f, const ZPoint& x, bool check_ic = false);

struct HullReport {
  std::vector<RatVec> vertices;
  bool all_vertices_integral = false;
  std::vector<ZPoint> edge_primitive_directions;
  bool directions_in_pm1 = false;
  bool hole_free = false;
};

/// Vertices, primitive edge directions (gcd-reduced, sign-normalized) and
/// hole-freeness (S = conv(S) cap Z^n) of conv(S).
HullReport hull_report(const ZSet& s);

}  // namespace icx
