// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#include "icx/polytope.hpp"

#include <algorithm>
#include <set>

#include "icx/linalg.hpp"

namespace icx {

Polytope Polytope::from_points(std::vector<RatVec> pts) {
  if (pts.empty()) throw std::invalid_argument("Polytope: empty point list");
  Polytope p;
  p.dim_ = static_cast<int>(pts[0].size());
  for (const auto& v : pts)
    if (static_cast<int>(v.size()) != p.dim_)
      throw std::invalid_argument("Polytope: inconsistent point dimensions");
  p.rep_ = std::move(pts);
  return p;
}

Polytope Polytope::from_hrep(IneqSystem sys) {
  Polytope p;
  p.dim_ = sys.dim;
  p.rep_ = std::move(sys);
  return p;
}

HullMembership hull_membership(const RatVec& x, const std::vector<RatVec>& points) {
  if (points.empty()) throw std::invalid_argument("hull_membership: empty point list");
  const int n = static_cast<int>(x.size());
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != n)
      throw std::invalid_argument("hull_membership: dimension mismatch");
  const int k = static_cast<int>(points.size());

  LpProblem prob;
  prob.num_vars = k;
  prob.nonneg.assign(k, true);
  for (int i = 0; i < n; ++i) {
    RatVec row(k);
    for (int j = 0; j < k; ++j) row[j] = points[j][i];
    prob.rows.push_back(LpConstraint{std::move(row), Rel::EQ, x[i]});
  }
  prob.rows.push_back(LpConstraint{RatVec(k, Rat(1)), Rel::EQ, Rat(1)});

  const LpResult res = solve_lp(prob, RatVec(k, Rat(0)), LpSense::Min);
  HullMembership out;
  if (res.status != LpStatus::Optimal) return out;
  out.member = true;
  out.coefficients = res.point;
  return out;
}

std::vector<RatVec> extreme_points(const std::vector<RatVec>& points) {
  // Dedup first so a repeated vertex is not discarded as "in the others".
  std::vector<RatVec> uniq;
  {
    std::set<RatVec> seen;
    for (const auto& p : points)
      if (seen.insert(p).second) uniq.push_back(p);
  }
  if (uniq.size() == 1) return uniq;
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    std::vector<RatVec> others;
    others.reserve(uniq.size() - 1);
    for (std::size_t j = 0; j < uniq.size(); ++j)
      if (j != i) others.push_back(uniq[j]);
    if (!hull_membership(uniq[i], others).member) out.push_back(uniq[i]);
  }
  return out;
}

namespace {

// All size-k index subsets of {0..m-1}, visited in lexicographic order.
template <typename Fn>
void for_each_subset(int m, int k, Fn fn) {
  if (k > m || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<RatVec> vertices_of_hrep(const IneqSystem& sys) {
  const int n = sys.dim;
  // Feasibility first.
  const LpResult feas = lp_solve(RatVec(n, Rat(0)), sys, LpSense::Min);
  if (feas.status == LpStatus::Infeasible) return {};
  // Boundedness in every coordinate direction.
  for (int j = 0; j < n; ++j) {
    RatVec e(n, Rat(0));
    e[j] = 1;
    if (lp_solve(e, sys, LpSense::Max).status == LpStatus::Unbounded ||
        lp_solve(e, sys, LpSense::Min).status == LpStatus::Unbounded)
      throw std::invalid_argument("enumerate_vertices: unbounded polyhedron");
  }
  const int m = static_cast<int>(sys.rows.size());
  std::set<RatVec> found;
  for_each_subset(m, n, [&](const std::vector<int>& idx) {
    RatMat a;
    RatVec b;
    for (int i : idx) {
      a.push_back(sys.rows[i].coeffs);
      b.push_back(sys.rows[i].rhs);
    }
    const auto sol = solve_square(std::move(a), std::move(b));
    if (sol && sys.satisfied_by(*sol)) found.insert(*sol);
  });
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<RatVec> enumerate_vertices(const Polytope& poly) {
  if (poly.has_vform()) {
    auto verts = extreme_points(poly.vform());
    std::sort(verts.begin(), verts.end());
    return verts;
  }
  return vertices_of_hrep(poly.hform());
}

IneqSystem hrep_of(const std::vector<RatVec>& points) {
  if (points.empty()) throw std::invalid_argument("hrep_of: empty point list");
  const int n = static_cast<int>(points[0].size());
  std::vector<RatVec> pts;
  {
    std::set<RatVec> seen;
    for (const auto& p : points)
      if (seen.insert(p).second) pts.push_back(p);
  }
  IneqSystem out(n);

  const RatVec& base = pts[0];
  RatMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], base));
  const int d = diffs.empty() ? 0 : rank(diffs);

  // Affine-hull equalities, as paired inequalities.
  const std::vector<RatVec> hull_normals = diffs.empty()
                                               ? [&] {
                                                   std::vector<RatVec> id;
                                                   for (int j = 0; j < n; ++j) {
                                                     RatVec e(n, Rat(0));
                                                     e[j] = 1;
                                                     id.push_back(std::move(e));
                                                   }
                                                   return id;
                                                 }()
                                               : nullspace(diffs);
  for (const auto& a : hull_normals) {
    const Rat c = dot(a, base);
    out.add_row(a, c);
    RatVec neg(n);
    for (int j = 0; j < n; ++j) neg[j] = -a[j];
    out.add_row(std::move(neg), -c);
  }
  if (d == 0) return normalized(out);

  // Facets: affine hulls of d affinely independent input points that keep
  // all points on one side.
  const int m = static_cast<int>(pts.size());
  for_each_subset(m, d, [&](const std::vector<int>& idx) {
    RatMat tdiffs;
    for (std::size_t i = 1; i < idx.size(); ++i)
      tdiffs.push_back(sub(pts[idx[i]], pts[idx[0]]));
    if (!tdiffs.empty() && rank(tdiffs) != d - 1) return;
    if (tdiffs.empty() && d != 1) return;
    const auto candidates = tdiffs.empty()
                                ? [&] {
                                    std::vector<RatVec> id;
                                    for (int j = 0; j < n; ++j) {
                                      RatVec e(n, Rat(0));
                                      e[j] = 1;
                                      id.push_back(std::move(e));
                                    }
                                    return id;
                                  }()
                                : nullspace(tdiffs);
    RatVec a;
    for (const auto& cand : candidates) {
      if (!in_span(hull_normals, cand)) {
        a = cand;
        break;
      }
    }
    if (a.empty()) return;
    bool any_pos = false, any_neg = false;
    const Rat c = dot(a, pts[idx[0]]);
    for (const auto& p : pts) {
      const Rat s = dot(a, p) - c;
      if (s > 0) any_pos = true;
      if (s < 0) any_neg = true;
      if (any_pos && any_neg) return;
    }
    if (!any_pos) out.add_row(a, c);  // every point has a.p <= c
    if (!any_neg) {
      RatVec neg(n);
      for (int j = 0; j < n; ++j) neg[j] = -a[j];
      out.add_row(std::move(neg), -c);
    }
  });
  return normalized(out);
}

IneqSystem hrep_of(const Polytope& poly) {
  if (!poly.has_vform()) return poly.hform();
  return hrep_of(poly.vform());
}

std::optional<Separation> separate_from_hull(const RatVec& x,
                                             const std::vector<RatVec>& points) {
  const int n = static_cast<int>(x.size());
  const int k = static_cast<int>(points.size());
  LpProblem prob;
  prob.num_vars = k;
  prob.nonneg.assign(k, true);
  for (int i = 0; i < n; ++i) {
    RatVec row(k);
    for (int j = 0; j < k; ++j) row[j] = points[j][i];
    prob.rows.push_back(LpConstraint{std::move(row), Rel::EQ, x[i]});
  }
  prob.rows.push_back(LpConstraint{RatVec(k, Rat(1)), Rel::EQ, Rat(1)});
  const LpResult res = solve_lp(prob, RatVec(k, Rat(0)), LpSense::Min);
  if (res.status == LpStatus::Optimal) return std::nullopt;

  // Farkas multipliers (d, gamma): d.y + gamma <= 0 for every point and
  // d.x + gamma > 0, so d separates with threshold -gamma.
  RatVec d(res.farkas.begin(), res.farkas.begin() + n);
  const Rat gamma = res.farkas[n];
  Int lcm = 1;
  for (const auto& v : d) lcm = boost::multiprecision::lcm(lcm, rat_den(v));
  Separation sep;
  sep.direction.resize(n);
  Int g = 0;
  for (int j = 0; j < n; ++j) {
    sep.direction[j] = Int(rat_num(d[j]) * (lcm / rat_den(d[j])));
    g = boost::multiprecision::gcd(g, sep.direction[j]);
  }
  if (g > 1)
    for (auto& v : sep.direction) v /= g;
  else
    g = 1;
  sep.threshold = -gamma * make_rat(lcm, g);

  // The certificate must re-verify exactly.
  RatVec dir_rat(n);
  for (int j = 0; j < n; ++j) dir_rat[j] = Rat(sep.direction[j]);
  if (dot(dir_rat, x) <= sep.threshold)
    throw std::logic_error("separate_from_hull: certificate failed at x");
  for (const auto& p : points)
    if (dot(dir_rat, p) > sep.threshold)
      throw std::logic_error("separate_from_hull: certificate failed at hull point");
  return sep;
}

}  // namespace icx
