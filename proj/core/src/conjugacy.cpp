// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#include "icx/conjugacy.hpp"

#include <algorithm>

#include "icx/fm_subgradient.hpp"
#include "icx/fourier_motzkin.hpp"

namespace icx {

Int integral_conjugate(const ZFunction& f, const ZPoint& p) {
  if (static_cast<int>(p.size()) != f.dim)
    throw std::invalid_argument("integral_conjugate: dimension mismatch");
  if (f.table.empty()) throw std::invalid_argument("integral_conjugate: empty domain");
  bool first = true;
  Int best = 0;
  for (const auto& [x, fx] : f.table) {
    const Int v = zdot(p, x) - fx;
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

ZFunction conjugate_table(const ZFunction& f, const ZPoint& lo, const ZPoint& hi) {
  if (static_cast<int>(lo.size()) != f.dim || static_cast<int>(hi.size()) != f.dim)
    throw std::invalid_argument("conjugate_table: box dimension mismatch");
  for (int i = 0; i < f.dim; ++i)
    if (lo[i] > hi[i]) throw std::invalid_argument("conjugate_table: empty box");
  ZFunction out;
  out.dim = f.dim;
  for_each_box_point(lo, hi, [&](const ZPoint& p) {
    out.table.emplace(p, integral_conjugate(f, p));
  });
  return out;
}

SubdifferentialHRep real_subdifferential_hrep(const ZFunction& f, const ZPoint& x,
                                              bool local) {
  auto it = f.table.find(x);
  if (it == f.table.end())
    throw std::invalid_argument("real_subdifferential_hrep: x not in dom f");
  const Int fx = it->second;
  SubdifferentialHRep rep;
  rep.anchor = x;
  rep.system.dim = f.dim;
  auto add = [&](const ZPoint& y, const Int& fy) {
    if (y == x) return;
    RatVec coeffs(f.dim);
    for (int i = 0; i < f.dim; ++i) coeffs[i] = Rat(y[i] - x[i]);
    rep.system.add_row(std::move(coeffs), Rat(fy - fx));
  };
  if (local) {
    for_each_box_point(ZPoint(f.dim, Int(-1)), ZPoint(f.dim, Int(1)),
                       [&](const ZPoint& d) {
                         const ZPoint y = zadd(x, d);
                         auto jt = f.table.find(y);
                         if (jt != f.table.end()) add(y, jt->second);
                       });
  } else {
    for (const auto& [y, fy] : f.table) add(y, fy);
  }
  return rep;
}

bool verify_subgradient(const ZFunction& f, const ZPoint& x, const ZPoint& p) {
  auto it = f.table.find(x);
  if (it == f.table.end()) return false;
  const Int fx = it->second;
  for (const auto& [y, fy] : f.table)
    if (fy - fx < zdot(p, zsub(y, x))) return false;
  return true;
}

std::string IntegerInfeasibilityProof::str() const {
  if (real_infeasible)
    return "the real relaxation is already infeasible (contradictory constant row)\n";
  std::string s;
  for (const auto& b : branches) {
    s += "p" + std::to_string(b.var + 1) + " in [" + b.lo.str() + ", " + b.hi.str() +
         "]: no integer";
    if (!b.tail.empty()) {
      s += " given";
      for (std::size_t i = 0; i < b.tail.size(); ++i)
        s += " p" + std::to_string(b.var + 2 + static_cast<int>(i)) + "=" +
             b.tail[i].str();
    }
    s += "\n";
  }
  if (branches_total > static_cast<long>(branches.size()))
    s += "(" + std::to_string(branches_total - branches.size()) +
         " further failed branches omitted)\n";
  return s;
}

namespace {

struct Search {
  const std::vector<FmElimination>* elims = nullptr;
  int n = 0;
  IntegerInfeasibilityProof proof;
  bool truncated_failure = false;
  long nodes = 0;
  static constexpr long kMaxNodes = 500000;
  static constexpr int kWindow = 8;
  static constexpr int kWideLimit = 512;
  static constexpr std::size_t kMaxRecorded = 64;

  // q holds chosen values for variables > stage; returns a full solution.
  std::optional<ZPoint> dfs(int stage, RatVec& q) {
    if (++nodes > kMaxNodes)
      throw std::runtime_error("integer_feasible: search node limit exceeded");
    const auto [lo, hi] = interval_at((*elims)[stage], q);

    std::vector<Int> candidates;
    bool truncated_here = false;
    if (lo.is_finite() && hi.is_finite()) {
      const Int a = ceil_rat(lo.finite()), b = floor_rat(hi.finite());
      if (a > b) {
        record_failure(stage, q, lo, hi);
        return std::nullopt;
      }
      Int count = b - a + 1;
      if (count > kWideLimit) {
        count = kWideLimit;
        truncated_here = true;
      }
      for (Int v = b; v > b - count; --v) candidates.push_back(v);
    } else if (hi.is_finite()) {
      const Int b = floor_rat(hi.finite());
      for (int i = 0; i < kWindow; ++i) candidates.push_back(Int(b - i));
      truncated_here = true;
    } else if (lo.is_finite()) {
      const Int a = ceil_rat(lo.finite());
      for (int i = 0; i < kWindow; ++i) candidates.push_back(Int(a + i));
      truncated_here = true;
    } else {
      candidates.push_back(Int(0));
      for (int i = 1; i <= kWindow / 2; ++i) {
        candidates.push_back(Int(i));
        candidates.push_back(Int(-i));
      }
      truncated_here = true;
    }

    for (const Int& v : candidates) {
      q[stage] = Rat(v);
      if (stage == 0) {
        ZPoint p(n);
        for (int i = 0; i < n; ++i) p[i] = rat_num(q[i]);
        return p;
      }
      if (auto sol = dfs(stage - 1, q)) return sol;
    }
    q[stage] = 0;
    if (truncated_here) truncated_failure = true;
    return std::nullopt;
  }

  void record_failure(int stage, const RatVec& q, const ExtVal& lo, const ExtVal& hi) {
    ++proof.branches_total;
    if (proof.branches.size() >= kMaxRecorded) return;
    IntegerInfeasibilityProof::Branch b;
    b.var = stage;
    for (int i = stage + 1; i < n; ++i) b.tail.push_back(rat_num(q[i]));
    b.lo = lo;
    b.hi = hi;
    proof.branches.push_back(std::move(b));
  }
};

}  // namespace

IntegerFeasibility integer_feasible(const IneqSystem& sys) {
  const int n = sys.dim;
  IntegerFeasibility out;

  std::vector<FmElimination> elims;
  IneqSystem cur = normalized(sys);
  for (int j = 0; j < n; ++j) {
    elims.push_back(fm_eliminate_general(cur, j));
    // A surviving constant row is contradictory by construction.
    for (const auto& row : elims.back().projected.rows) {
      if (is_zero(row.coeffs) && row.rhs < 0) {
        IntegerInfeasibilityProof proof;
        proof.real_infeasible = true;
        out.feasible = false;
        out.proof = std::move(proof);
        return out;
      }
    }
    cur = elims.back().projected;
  }

  Search search;
  search.elims = &elims;
  search.n = n;
  RatVec q(n, Rat(0));
  auto sol = search.dfs(n - 1, q);
  if (sol) {
    if (!sys.satisfied_by(to_ratvec(*sol)))
      throw std::logic_error("integer_feasible: candidate failed re-verification");
    out.feasible = true;
    out.point = std::move(*sol);
    return out;
  }
  if (search.truncated_failure)
    throw std::runtime_error(
        "integer_feasible: search truncated on an unbounded interval; "
        "emptiness cannot be certified");
  out.feasible = false;
  out.proof = std::move(search.proof);
  return out;
}

SubdifferentialDecision integral_subdifferential_nonempty(const ZFunction& f,
                                                          const ZPoint& x) {
  if (!f.in_dom(x))
    throw std::invalid_argument("integral_subdifferential_nonempty: x not in dom f");
  SubdifferentialDecision out;

  // Cheap route first: the local elimination chain produces a candidate
  // whenever f behaves integrally convex around x; a global verification
  // makes the certificate unconditional.
  if (auto cand = fm_local_candidate(f, x)) {
    if (verify_subgradient(f, x, *cand)) {
      out.nonempty = true;
      out.certificate = SubgradientCertificate{
          x, *cand, static_cast<long>(f.table.size()) - 1};
      return out;
    }
  }

  const auto rep = real_subdifferential_hrep(f, x, /*local=*/false);
  IntegerFeasibility feas = integer_feasible(rep.system);
  if (feas.feasible) {
    if (!verify_subgradient(f, x, *feas.point))
      throw std::logic_error("integral_subdifferential_nonempty: bad certificate");
    out.nonempty = true;
    out.certificate = SubgradientCertificate{
        x, std::move(*feas.point), static_cast<long>(f.table.size()) - 1};
    return out;
  }
  out.nonempty = false;
  out.proof = std::move(feas.proof);
  return out;
}

namespace {

Int coordinate_spread(const ZSet& dom) {
  const auto [lo, hi] = dom.bounding_box();
  Int spread = 0;
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (hi[i] - lo[i] > spread) spread = hi[i] - lo[i];
  return spread;
}

struct BoxSearch {
  ExtVal value = ExtVal::minus_inf();
  std::optional<ZPoint> argmax;
};

BoxSearch biconjugate_box_search(const ZFunction& f, const ZPoint& x, const Int& bound) {
  BoxSearch best;
  const int n = f.dim;
  for_each_box_point(ZPoint(n, -bound), ZPoint(n, bound), [&](const ZPoint& p) {
    const Int v = zdot(p, x) - integral_conjugate(f, p);
    if (!best.argmax || ExtVal(Rat(v)) > best.value) {
      best.value = ExtVal(Rat(v));
      best.argmax = p;
    }
  });
  return best;
}

}  // namespace

BiconjugateResult integral_biconjugate_full(const ZFunction& f, const ZPoint& x) {
  if (static_cast<int>(x.size()) != f.dim)
    throw std::invalid_argument("integral_biconjugate: dimension mismatch");
  BiconjugateResult res;

  if (f.in_dom(x)) {
    const auto dec = integral_subdifferential_nonempty(f, x);
    if (dec.nonempty) {
      const ZPoint& p = dec.certificate->p;
      const Int fstar = integral_conjugate(f, p);
      if (Rat(f.table.at(x)) + Rat(fstar) != Rat(zdot(p, x)))
        throw std::logic_error("integral_biconjugate: certificate identity failed");
      res.value = ExtVal(Rat(f.table.at(x)));
      res.attaining_p = p;
      res.via_subgradient = true;
      return res;
    }
  }

  const auto dom_pts = f.domain().rat_points();
  if (auto sep = separate_from_hull(to_ratvec(x), dom_pts)) {
    res.value = ExtVal::plus_inf();
    res.separation = std::move(*sep);
    return res;
  }

  // x lies in conv(dom f) but has no integer subgradient: bounded search
  // with a doubling stability check.
  const Int range = f.max_value() - f.min_value();
  const Int bound = 1 + Int(f.dim + 1) * range + coordinate_spread(f.domain());
  const BoxSearch first = biconjugate_box_search(f, x, bound);
  const BoxSearch second = biconjugate_box_search(f, x, Int(2 * bound));
  if (first.value != second.value)
    throw std::runtime_error("integral_biconjugate: value unstable under bound doubling");
  res.value = first.value;
  res.attaining_p = first.argmax;
  res.search_bound = 2 * bound;
  return res;
}

ExtVal integral_biconjugate(const ZFunction& f, const ZPoint& x) {
  return integral_biconjugate_full(f, x).value;
}

Lemma32Report conjugate_subgradient_suite(const ZFunction& f,
                                          const std::vector<ZPoint>& sample_p,
                                          int box_radius) {
  Lemma32Report report;
  for (const auto& p : sample_p) {
    Lemma32Report::Entry e;
    e.p = p;
    // Lexicographically smallest maximizer of <p, x> - f(x).
    const Int fstar = integral_conjugate(f, p);
    for (const auto& [x, fx] : f.table) {
      if (zdot(p, x) - fx == fstar) {
        e.argmax_x = x;
        break;
      }
    }
    e.identity_holds = Rat(f.table.at(e.argmax_x)) + Rat(fstar) == Rat(zdot(p, e.argmax_x));
    e.biconjugacy_holds =
        integral_biconjugate(f, e.argmax_x) == ExtVal(Rat(f.table.at(e.argmax_x)));

    e.symmetry_holds = true;
    ZPoint qlo(f.dim), qhi(f.dim);
    for (int i = 0; i < f.dim; ++i) {
      qlo[i] = p[i] - box_radius;
      qhi[i] = p[i] + box_radius;
    }
    for_each_box_point(qlo, qhi, [&](const ZPoint& q) {
      if (!e.symmetry_holds) return;
      const Int lhs = integral_conjugate(f, q) - fstar;
      if (lhs < zdot(e.argmax_x, zsub(q, p))) e.symmetry_holds = false;
    });

    if (!(e.identity_holds && e.biconjugacy_holds && e.symmetry_holds))
      report.all_pass = false;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace icx
