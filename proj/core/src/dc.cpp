// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#include "icx/dc.hpp"

#include <set>

#include "icx/checker.hpp"
#include "icx/conjugacy.hpp"
#include "icx/fm_subgradient.hpp"
#include "icx/polytope.hpp"

namespace icx {

DcReport toland_singer(const DcInstance& inst, int sample_radius) {
  const ZFunction& g = inst.g;
  const ZFunction& h = inst.h;
  if (g.dim != h.dim) throw std::invalid_argument("toland_singer: dimension mismatch");
  if (!is_integrally_convex_function(h).is_ic)
    throw std::invalid_argument("toland_singer: h is not integrally convex");
  bool overlap = false;
  for (const auto& [x, gx] : g.table)
    if (h.in_dom(x)) overlap = true;
  if (!overlap) throw std::invalid_argument("toland_singer: dom g and dom h are disjoint");

  DcReport rep;

  // g finite where h is +inf drives both sides to -inf: such an x lies
  // outside conv(dom h) because an integrally convex domain is hole-free,
  // so the dual objective decays along the separating direction.
  for (const auto& [x, gx] : g.table) {
    if (h.in_dom(x)) continue;
    const auto sep = separate_from_hull(to_ratvec(x), h.domain().rat_points());
    if (!sep)
      throw std::logic_error("toland_singer: hole in an integrally convex domain");
    rep.primal = ExtVal::minus_inf();
    rep.dual = ExtVal::minus_inf();
    rep.equal = true;
    return rep;
  }

  // dom g is contained in dom h: exhaust the primal side.
  bool first = true;
  Rat best;
  ZPoint argmin;
  for (const auto& [x, gx] : g.table) {
    const Rat v = Rat(gx - h.table.at(x));
    if (first || v < best) {
      best = v;
      argmin = x;
      first = false;
    }
  }
  rep.primal = ExtVal(best);
  rep.primal_argmin = argmin;

  // Dual candidates: an integer subgradient of h at every domain point
  // (one of them, at the primal argmin, attains the dual optimum) plus a
  // small box sample around the origin.
  std::set<ZPoint> candidates;
  for (const auto& [x, hx] : h.table)
    candidates.insert(fm_integer_subgradient(h, x).p);
  for_each_box_point(ZPoint(h.dim, Int(-sample_radius)),
                     ZPoint(h.dim, Int(sample_radius)),
                     [&](const ZPoint& p) { candidates.insert(p); });

  bool dfirst = true;
  Rat dbest;
  ZPoint dargmin;
  for (const auto& p : candidates) {
    const Rat v = Rat(integral_conjugate(h, p) - integral_conjugate(g, p));
    if (dfirst || v < dbest) {
      dbest = v;
      dargmin = p;
      dfirst = false;
    }
  }
  rep.dual = ExtVal(dbest);
  rep.dual_argmin = dargmin;
  rep.equal = rep.primal == rep.dual;
  return rep;
}

}  // namespace icx
