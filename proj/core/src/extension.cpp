// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#include "icx/extension.hpp"

#include "icx/lp.hpp"

namespace icx {

NeighborhoodResult integral_neighborhood(const RatVec& x) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<Int>> choices(n);
  for (int i = 0; i < n; ++i) {
    const Int fl = floor_rat(x[i]);
    choices[i].push_back(fl);
    if (!is_integral(x[i])) choices[i].push_back(fl + 1);
  }
  NeighborhoodResult res;
  res.center = x;
  std::vector<int> idx(n, 0);
  for (;;) {
    ZPoint p(n);
    for (int i = 0; i < n; ++i) p[i] = choices[i][idx[i]];
    res.points.push_back(std::move(p));
    int i = n - 1;
    while (i >= 0 && idx[i] + 1 == static_cast<int>(choices[i].size())) {
      idx[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++idx[i];
  }
  return res;
}

ExtensionResult local_convex_extension(const ZFunction& f, const RatVec& x) {
  if (static_cast<int>(x.size()) != f.dim)
    throw std::invalid_argument("local_convex_extension: dimension mismatch");
  const auto nbhd = integral_neighborhood(x);
  std::vector<ZPoint> support;
  for (const auto& z : nbhd.points)
    if (f.in_dom(z)) support.push_back(z);

  ExtensionResult res{ExtVal::plus_inf(), std::nullopt};
  if (support.empty()) return res;

  const int k = static_cast<int>(support.size());
  LpProblem prob;
  prob.num_vars = k;
  prob.nonneg.assign(k, true);
  for (int i = 0; i < f.dim; ++i) {
    RatVec row(k);
    for (int j = 0; j < k; ++j) row[j] = Rat(support[j][i]);
    prob.rows.push_back(LpConstraint{std::move(row), Rel::EQ, x[i]});
  }
  prob.rows.push_back(LpConstraint{RatVec(k, Rat(1)), Rel::EQ, Rat(1)});

  RatVec cost(k);
  for (int j = 0; j < k; ++j) cost[j] = Rat(f.table.at(support[j]));
  const LpResult lp = solve_lp(prob, cost, LpSense::Min);
  if (lp.status != LpStatus::Optimal) return res;

  res.value = ExtVal(lp.value);
  std::vector<std::pair<ZPoint, Rat>> coeffs;
  for (int j = 0; j < k; ++j)
    if (lp.point[j] != 0) coeffs.emplace_back(support[j], lp.point[j]);
  res.coefficients = std::move(coeffs);
  return res;
}

}  // namespace icx
