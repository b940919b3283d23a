// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#include "icx/fourier_motzkin.hpp"

namespace icx {

FmElimination fm_eliminate_general(const IneqSystem& sys, int var) {
  if (var < 0 || var >= sys.dim)
    throw std::invalid_argument("fm_eliminate_general: bad variable index");
  FmElimination out;
  out.var = var;
  IneqSystem proj(sys.dim);
  for (const auto& row : sys.rows) {
    const Rat& c = row.coeffs[var];
    if (c == 0) {
      proj.rows.push_back(row);
      continue;
    }
    LinRow scaled = row;
    const Rat inv = Rat(1) / (c > 0 ? c : -c);
    for (auto& x : scaled.coeffs) x *= inv;
    scaled.rhs *= inv;
    (c > 0 ? out.uppers : out.lowers).push_back(std::move(scaled));
  }
  for (const auto& up : out.uppers) {
    for (const auto& lo : out.lowers) {
      LinRow cross;
      cross.coeffs = add(up.coeffs, lo.coeffs);
      cross.coeffs[var] = 0;  // +1 and -1 cancel; keep it exact
      cross.rhs = up.rhs + lo.rhs;
      proj.rows.push_back(std::move(cross));
    }
  }
  proj = normalized(proj);
  // Vacuous 0 <= nonneg rows are dropped; a contradictory constant row is
  // kept as an explicit infeasibility marker.
  IneqSystem cleaned(sys.dim);
  for (auto& row : proj.rows) {
    if (is_zero(row.coeffs) && row.rhs >= 0) continue;
    cleaned.rows.push_back(std::move(row));
  }
  out.projected = std::move(cleaned);
  return out;
}

std::pair<ExtVal, ExtVal> interval_at(const FmElimination& elim, const RatVec& q) {
  ExtVal lo = ExtVal::minus_inf();
  ExtVal hi = ExtVal::plus_inf();
  for (const auto& row : elim.lowers) {
    Rat bound = -row.rhs;
    for (std::size_t j = 0; j < q.size(); ++j)
      if (static_cast<int>(j) != elim.var) bound += row.coeffs[j] * q[j];
    if (lo < ExtVal(bound)) lo = ExtVal(bound);
  }
  for (const auto& row : elim.uppers) {
    Rat bound = row.rhs;
    for (std::size_t j = 0; j < q.size(); ++j)
      if (static_cast<int>(j) != elim.var) bound -= row.coeffs[j] * q[j];
    if (ExtVal(bound) < hi) hi = ExtVal(bound);
  }
  return {lo, hi};
}

}  // namespace icx
