// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "icx/inequality_system.hpp"
#include "icx/rational.hpp"

namespace icx {

enum class Rel { LE, GE, EQ };
enum class LpSense { Min, Max };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpConstraint {
  RatVec coeffs;
  Rel rel;
  Rat rhs;
};

/// General-form problem: rows over num_vars variables; nonneg[j] marks
/// x_j >= 0, otherwise x_j is free. An empty nonneg vector means all free.
struct LpProblem {
  int num_vars = 0;
  std::vector<LpConstraint> rows;
  std::vector<bool> nonneg;
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;     // meaningful when Optimal
  RatVec point;  // meaningful when Optimal
  /// When Infeasible: one multiplier per input row (in input order, signs
  /// relative to each row as written) combining to a contradiction.
  /// Callers re-verify the certificate for their own construction.
  RatVec farkas;
};

/// Exact two-phase primal simplex with Bland's rule. Deterministic.
LpResult solve_lp(const LpProblem& prob, const RatVec& objective, LpSense sense);

/// Optimize over A p <= b with free variables: the plain polyhedral form.
/// A zero objective on a nonempty feasible set reports Optimal with value 0.
LpResult lp_solve(const RatVec& objective, const IneqSystem& sys, LpSense sense);

}  // namespace icx
