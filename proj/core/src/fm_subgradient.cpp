// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#include "icx/fm_subgradient.hpp"

#include "icx/linalg.hpp"
#include "icx/lp.hpp"

namespace icx {

IneqSystem build_local_system(const ZFunction& f, const ZPoint& x) {
  auto it = f.table.find(x);
  if (it == f.table.end())
    throw std::invalid_argument("build_local_system: x not in dom f");
  const Int fx = it->second;
  IneqSystem sys(f.dim);
  for_each_box_point(ZPoint(f.dim, Int(-1)), ZPoint(f.dim, Int(1)),
                     [&](const ZPoint& y) {
                       bool zero = true;
                       for (const auto& c : y)
                         if (c != 0) zero = false;
                       if (zero) return;
                       auto jt = f.table.find(zadd(x, y));
                       if (jt == f.table.end()) return;
                       RatVec coeffs(f.dim);
                       for (int i = 0; i < f.dim; ++i) coeffs[i] = Rat(y[i]);
                       sys.add_row(std::move(coeffs), Rat(jt->second - fx));
                     });
  return sys;
}

SimplifiedStage fm_eliminate_simplified(const IneqSystem& sys, int var) {
  if (var < 0 || var >= sys.dim)
    throw std::invalid_argument("fm_eliminate_simplified: bad variable index");
  SimplifiedStage stage;
  stage.var = var;
  stage.remaining.dim = sys.dim;
  for (const auto& row : sys.rows) {
    for (int j = 0; j < sys.dim; ++j) {
      const Rat& c = row.coeffs[j];
      if (c != -1 && c != 0 && c != 1)
        throw std::invalid_argument(
            "fm_eliminate_simplified: coefficients must lie in {-1,0,+1}");
      if (j < var && c != 0)
        throw std::invalid_argument(
            "fm_eliminate_simplified: earlier variables must be eliminated");
    }
    const Rat& c = row.coeffs[var];
    if (c == 0)
      stage.remaining.rows.push_back(row);
    else if (c == 1)
      stage.uppers.push_back(row);
    else
      stage.lowers.push_back(row);
  }
  return stage;
}

std::string BackSubstitutionTrace::str() const {
  std::string s;
  for (const auto& st : steps) {
    s += "p" + std::to_string(st.var + 1) + ": partition +" +
         std::to_string(st.uppers) + "/0:" + std::to_string(st.zeros) + "/-" +
         std::to_string(st.lowers) + ", interval [" + st.lo.str() + ", " +
         st.hi.str() + "] -> " + st.chosen.str() + "\n";
  }
  return s;
}

namespace {

std::vector<int> identity_order(int n) {
  std::vector<int> o(n);
  for (int i = 0; i < n; ++i) o[i] = i;
  return o;
}

IneqSystem permute_columns(const IneqSystem& sys, const std::vector<int>& order) {
  IneqSystem out(sys.dim);
  for (const auto& row : sys.rows) {
    RatVec c(sys.dim);
    for (int k = 0; k < sys.dim; ++k) c[k] = row.coeffs[order[k]];
    out.rows.push_back(LinRow{std::move(c), row.rhs});
  }
  return out;
}

}  // namespace

std::optional<ZPoint> fm_local_candidate(const ZFunction& f, const ZPoint& x,
                                         BackSubstitutionTrace* trace,
                                         const std::vector<int>* order) {
  const int n = f.dim;
  std::vector<int> ord = order ? *order : identity_order(n);
  {
    std::vector<bool> seen(n, false);
    if (static_cast<int>(ord.size()) != n)
      throw std::invalid_argument("fm_local_candidate: bad elimination order");
    for (int v : ord) {
      if (v < 0 || v >= n || seen[v])
        throw std::invalid_argument("fm_local_candidate: bad elimination order");
      seen[v] = true;
    }
  }

  IneqSystem sys = permute_columns(build_local_system(f, x), ord);
  std::vector<SimplifiedStage> stages;
  for (int j = 0; j < n; ++j) {
    stages.push_back(fm_eliminate_simplified(sys, j));
    sys = stages.back().remaining;
  }

  if (trace) trace->steps.clear();
  ZPoint p_perm(n, Int(0));
  for (int j = n - 1; j >= 0; --j) {
    const auto& st = stages[j];
    ExtVal lo = ExtVal::minus_inf(), hi = ExtVal::plus_inf();
    for (const auto& row : st.lowers) {
      Rat bound = -row.rhs;
      for (int k = j + 1; k < n; ++k) bound += row.coeffs[k] * Rat(p_perm[k]);
      if (lo < ExtVal(bound)) lo = ExtVal(bound);
    }
    for (const auto& row : st.uppers) {
      Rat bound = row.rhs;
      for (int k = j + 1; k < n; ++k) bound -= row.coeffs[k] * Rat(p_perm[k]);
      if (ExtVal(bound) < hi) hi = ExtVal(bound);
    }
    if (lo > hi) {
      if (trace) {
        BackSubstitutionTrace::Step step;
        step.var = ord[j];
        step.uppers = static_cast<int>(st.uppers.size());
        step.lowers = static_cast<int>(st.lowers.size());
        step.zeros = static_cast<int>(st.remaining.rows.size());
        step.lo = lo;
        step.hi = hi;
        step.chosen = 0;
        trace->steps.push_back(std::move(step));
      }
      return std::nullopt;
    }
    Int chosen;
    if (hi.is_finite())
      chosen = floor_rat(hi.finite());
    else if (lo.is_finite())
      chosen = ceil_rat(lo.finite());
    else
      chosen = 0;
    p_perm[j] = chosen;
    if (trace) {
      BackSubstitutionTrace::Step step;
      step.var = ord[j];
      step.uppers = static_cast<int>(st.uppers.size());
      step.lowers = static_cast<int>(st.lowers.size());
      step.zeros = static_cast<int>(st.remaining.rows.size());
      step.lo = lo;
      step.hi = hi;
      step.chosen = chosen;
      trace->steps.push_back(std::move(step));
    }
  }

  ZPoint p(n);
  for (int k = 0; k < n; ++k) p[ord[k]] = p_perm[k];
  return p;
}

SubgradientCertificate fm_integer_subgradient(const ZFunction& f, const ZPoint& x,
                                              BackSubstitutionTrace* trace,
                                              const std::vector<int>* order) {
  auto p = fm_local_candidate(f, x, trace, order);
  if (!p)
    throw NotIntegrallyConvex(
        "fm_integer_subgradient: empty stage interval at " + zpoint_to_string(x) +
        "; f is not integrally convex");
  if (!verify_subgradient(f, x, *p))
    throw std::logic_error(
        "fm_integer_subgradient: local certificate failed the global check; "
        "integral convexity of the input is in doubt");
  return SubgradientCertificate{x, std::move(*p),
                                static_cast<long>(f.table.size()) - 1};
}

ZPoint fm_bounded_vertex(const ZFunction& f, const ZPoint& x) {
  const int n = f.dim;
  const IneqSystem sys = build_local_system(f, x);
  for (int j = 0; j < n; ++j) {
    RatVec e(n, Rat(0));
    e[j] = 1;
    if (lp_solve(e, sys, LpSense::Max).status == LpStatus::Unbounded ||
        lp_solve(e, sys, LpSense::Min).status == LpStatus::Unbounded)
      throw std::invalid_argument(
          "fm_bounded_vertex: the subdifferential is unbounded; use "
          "fm_integer_subgradient instead");
  }

  IneqSystem cur = sys;
  std::vector<SimplifiedStage> stages;
  for (int j = 0; j < n; ++j) {
    stages.push_back(fm_eliminate_simplified(cur, j));
    cur = stages.back().remaining;
  }
  ZPoint p(n, Int(0));
  for (int j = n - 1; j >= 0; --j) {
    const auto& st = stages[j];
    ExtVal hi = ExtVal::plus_inf();
    for (const auto& row : st.uppers) {
      Rat bound = row.rhs;
      for (int k = j + 1; k < n; ++k) bound -= row.coeffs[k] * Rat(p[k]);
      if (ExtVal(bound) < hi) hi = ExtVal(bound);
    }
    if (!hi.is_finite())
      throw std::logic_error("fm_bounded_vertex: unbounded stage despite bounded LP");
    if (!is_integral(hi.finite()))
      throw std::logic_error("fm_bounded_vertex: fractional stage bound");
    p[j] = rat_num(hi.finite());
  }

  const RatVec pr = to_ratvec(p);
  if (!sys.satisfied_by(pr))
    throw std::logic_error("fm_bounded_vertex: result violates the local system");
  RatMat tight;
  for (const auto& row : sys.rows)
    if (dot(row.coeffs, pr) == row.rhs) tight.push_back(row.coeffs);
  if (rank(tight) != n)
    throw std::logic_error("fm_bounded_vertex: result is not a vertex");
  return p;
}

}  // namespace icx
