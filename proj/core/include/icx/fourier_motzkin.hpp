// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "icx/inequality_system.hpp"
#include "icx/rational.hpp"

namespace icx {

/// One general elimination step. `projected` carries no occurrence of the
/// eliminated variable (the zero column is kept so indices stay stable);
/// a point satisfies the input iff it satisfies `projected` and the
/// eliminated variable fits the interval reported by interval_at.
struct FmElimination {
  int var = 0;
  IneqSystem projected;
  std::vector<LinRow> uppers;  // scaled to coefficient +1 on var
  std::vector<LinRow> lowers;  // scaled to coefficient -1 on var
};

/// Textbook Fourier-Motzkin: cross-sums of every upper/lower pair, then
/// gcd-normalization and tightest-rhs deduplication to curb growth.
FmElimination fm_eliminate_general(const IneqSystem& sys, int var);

/// [lo, hi] for the eliminated variable at q (q's `var` slot is ignored).
/// Empty bound sets follow the max-of-empty = -inf, min-of-empty = +inf
/// convention.
std::pair<ExtVal, ExtVal> interval_at(const FmElimination& elim, const RatVec& q);

}  // namespace icx
