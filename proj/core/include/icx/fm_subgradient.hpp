// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icx/conjugacy.hpp"
#include "icx/inequality_system.hpp"
#include "icx/zfunction.hpp"

namespace icx {

struct NotIntegrallyConvex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Local system at x: one row y . p <= f(x+y) - f(x) per unit step
/// y in {-1,0,+1}^n with f(x+y) finite; the zero step is dropped.
/// Rows are ordered lexicographically in y.
IneqSystem build_local_system(const ZFunction& f, const ZPoint& x);

/// One elimination stage without cross rows: the input rows are merely
/// partitioned by their coefficient on `var`. Inputs must have {-1,0,+1}
/// coefficients and zero coefficients on all variables before `var`.
struct SimplifiedStage {
  int var = 0;
  IneqSystem remaining;        // zero coefficient on var
  std::vector<LinRow> uppers;  // coefficient +1
  std::vector<LinRow> lowers;  // coefficient -1
};
SimplifiedStage fm_eliminate_simplified(const IneqSystem& sys, int var);

/// Back-substitution record: per variable, the partition sizes at its
/// stage, the evaluated interval and the integer chosen from it.
struct BackSubstitutionTrace {
  struct Step {
    int var = 0;  // original coordinate index
    int uppers = 0;
    int lowers = 0;
    int zeros = 0;
    ExtVal lo, hi;
    Int chosen;
  };
  std::vector<Step> steps;  // in choice order: last eliminated variable first
  std::string str() const;
};

/// Runs the simplified chain and back substitution with the tie-break
/// "floor of a finite upper bound, else ceiling of the lower bound,
/// else 0". Returns nullopt when some stage interval is empty, which an
/// integrally convex f never produces. `order` permutes the elimination
/// sequence; the default is coordinate order.
std::optional<ZPoint> fm_local_candidate(const ZFunction& f, const ZPoint& x,
                                         BackSubstitutionTrace* trace = nullptr,
                                         const std::vector<int>* order = nullptr);

/// Constructive integer subgradient for integrally convex f: simplified
/// elimination, integer back substitution, then exhaustive verification
/// over dom f. Deterministic for fixed inputs and order. Throws
/// NotIntegrallyConvex when a stage interval is empty.
SubgradientCertificate fm_integer_subgradient(const ZFunction& f, const ZPoint& x,
                                              BackSubstitutionTrace* trace = nullptr,
                                              const std::vector<int>* order = nullptr);

/// All-upper-bounds back substitution, valid when the real subdifferential
/// at x is bounded (checked by LP in every coordinate direction; errors
/// otherwise, pointing at fm_integer_subgradient). The result is asserted
/// to be an integral vertex: n linearly independent tight rows.
ZPoint fm_bounded_vertex(const ZFunction& f, const ZPoint& x);

}  // namespace icx
