// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "icx/inequality_system.hpp"
#include "icx/lp.hpp"
#include "icx/rational.hpp"

namespace icx {

/// Bounded polyhedron, held as whichever description it was built from.
/// Conversions are on-demand (enumerate_vertices / hrep_of) and always
/// reproduce the same point set.
class Polytope {
 public:
  static Polytope from_points(std::vector<RatVec> pts);
  static Polytope from_hrep(IneqSystem sys);

  bool has_vform() const { return std::holds_alternative<std::vector<RatVec>>(rep_); }
  const std::vector<RatVec>& vform() const { return std::get<std::vector<RatVec>>(rep_); }
  const IneqSystem& hform() const { return std::get<IneqSystem>(rep_); }
  int dim() const { return dim_; }

 private:
  std::variant<std::vector<RatVec>, IneqSystem> rep_;
  int dim_ = 0;
};

struct HullMembership {
  bool member = false;
  /// Convex coefficients over the input points, in input order; present
  /// exactly when member. They sum to 1 and reconstruct x exactly.
  std::optional<std::vector<Rat>> coefficients;
};

/// Is x a convex combination of the given points? Exact LP feasibility.
HullMembership hull_membership(const RatVec& x, const std::vector<RatVec>& points);

/// The extreme points among `points` (canonical V-form), in input order.
std::vector<RatVec> extreme_points(const std::vector<RatVec>& points);

/// All vertices of a bounded polytope, sorted lexicographically.
/// H-form inputs use tight-row subsets of size n with a rank check;
/// V-form inputs are canonicalized. Throws on unbounded H-form input.
std::vector<RatVec> enumerate_vertices(const Polytope& poly);

/// Facet description of conv(points). Lower-dimensional hulls contribute
/// affine-hull equalities as paired rows.
IneqSystem hrep_of(const std::vector<RatVec>& points);
IneqSystem hrep_of(const Polytope& poly);

/// Strict separation certificate for x not in conv(points):
/// direction . y <= threshold for every point, direction . x > threshold,
/// with an integral direction. Empty when x is in the hull.
struct Separation {
  std::vector<Int> direction;
  Rat threshold;
};
std::optional<Separation> separate_from_hull(const RatVec& x,
                                             const std::vector<RatVec>& points);

}  // namespace icx
