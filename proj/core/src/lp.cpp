// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#include "icx/lp.hpp"

#include <cstddef>
#include <utility>

namespace icx {

namespace {

// Dense tableau over the equality standard form  A x = b, x >= 0, b >= 0.
class Tableau {
 public:
  Tableau(std::vector<RatVec> rows, RatVec rhs, std::vector<int> basis,
          std::vector<bool> artificial)
      : t_(std::move(rows)),
        rhs_(std::move(rhs)),
        basis_(std::move(basis)),
        artificial_(std::move(artificial)) {}

  int rows() const { return static_cast<int>(t_.size()); }
  int cols() const { return t_.empty() ? 0 : static_cast<int>(t_[0].size()); }
  const std::vector<int>& basis() const { return basis_; }
  bool is_artificial(int col) const { return artificial_[col]; }
  const Rat& rhs(int r) const { return rhs_[r]; }
  const Rat& at(int r, int c) const { return t_[r][c]; }

  void pivot(int pr, int pc) {
    const Rat inv = Rat(1) / t_[pr][pc];
    for (auto& x : t_[pr]) x *= inv;
    rhs_[pr] *= inv;
    for (int r = 0; r < rows(); ++r) {
      if (r == pr || t_[r][pc] == 0) continue;
      const Rat f = t_[r][pc];
      for (int c = 0; c < cols(); ++c) t_[r][c] -= f * t_[pr][c];
      rhs_[r] -= f * rhs_[pr];
    }
    basis_[pr] = pc;
  }

  // Minimizes cost from the current basis; artificial columns never
  // enter. Dantzig pricing over a maintained reduced-cost row, switching
  // permanently to Bland's rule after a run of degenerate pivots, so the
  // loop cannot cycle. Returns false when unbounded.
  bool run(const RatVec& cost) {
    RatVec red(cols());
    for (int c = 0; c < cols(); ++c) red[c] = reduced_cost(cost, c);
    bool bland = false;
    long stall = 0;
    const long stall_limit = 4L * (rows() + cols()) + 64;

    for (;;) {
      int enter = -1;
      if (bland) {
        for (int c = 0; c < cols(); ++c) {
          if (!artificial_[c] && red[c] < 0) {
            enter = c;
            break;
          }
        }
      } else {
        for (int c = 0; c < cols(); ++c)
          if (!artificial_[c] && red[c] < 0 && (enter < 0 || red[c] < red[enter]))
            enter = c;
      }
      if (enter < 0) return true;

      int leave = -1;
      Rat best;
      for (int r = 0; r < rows(); ++r) {
        if (t_[r][enter] <= 0) continue;
        const Rat ratio = rhs_[r] / t_[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;

      if (best == 0) {
        if (!bland && ++stall > stall_limit) bland = true;
      } else {
        stall = 0;
      }
      const Rat delta = red[enter];
      pivot(leave, enter);
      // The pivot row now carries a unit at the entering column, so the
      // maintained reduced costs stay exact under the same elimination.
      for (int c = 0; c < cols(); ++c)
        if (red[c] != 0 || t_[leave][c] != 0) red[c] -= delta * t_[leave][c];
    }
  }

  Rat reduced_cost(const RatVec& cost, int c) const {
    Rat rc = cost[c];
    for (int r = 0; r < rows(); ++r) {
      const Rat& cb = cost[basis_[r]];
      if (cb != 0) rc -= cb * t_[r][c];
    }
    return rc;
  }

  Rat objective(const RatVec& cost) const {
    Rat v = 0;
    for (int r = 0; r < rows(); ++r) v += cost[basis_[r]] * rhs_[r];
    return v;
  }

  // Pivots basic artificials out where possible; drops redundant rows.
  void drive_out_artificials() {
    for (int r = 0; r < rows();) {
      if (!artificial_[basis_[r]]) {
        ++r;
        continue;
      }
      int pc = -1;
      for (int c = 0; c < cols() && pc < 0; ++c)
        if (!artificial_[c] && t_[r][c] != 0) pc = c;
      if (pc >= 0) {
        pivot(r, pc);
        ++r;
      } else {
        t_.erase(t_.begin() + r);
        rhs_.erase(rhs_.begin() + r);
        basis_.erase(basis_.begin() + r);
      }
    }
  }

 private:
  std::vector<RatVec> t_;
  RatVec rhs_;
  std::vector<int> basis_;
  std::vector<bool> artificial_;
};

}  // namespace

LpResult solve_lp(const LpProblem& prob, const RatVec& objective, LpSense sense) {
  const int n = prob.num_vars;
  if (static_cast<int>(objective.size()) != n)
    throw std::invalid_argument("solve_lp: objective dimension mismatch");
  std::vector<bool> nonneg = prob.nonneg;
  if (nonneg.empty()) nonneg.assign(n, false);
  if (static_cast<int>(nonneg.size()) != n)
    throw std::invalid_argument("solve_lp: nonneg flag count mismatch");
  for (const auto& row : prob.rows)
    if (static_cast<int>(row.coeffs.size()) != n)
      throw std::invalid_argument("solve_lp: row dimension mismatch");

  // Structural columns: one per nonneg variable, a (u, v) pair per free one.
  std::vector<int> col_pos(n), col_neg(n, -1);
  int sc = 0;
  for (int j = 0; j < n; ++j) {
    col_pos[j] = sc++;
    if (!nonneg[j]) col_neg[j] = sc++;
  }
  const int m = static_cast<int>(prob.rows.size());

  // First pass: sign-fix rows, decide which need an artificial column.
  std::vector<Rat> row_sign(m, Rat(1));
  std::vector<bool> needs_artificial(m, false);
  int nslack = 0;
  for (int i = 0; i < m; ++i) {
    const auto& src = prob.rows[i];
    if (src.rel != Rel::EQ) ++nslack;
    const bool neg = src.rhs < 0;
    if (neg) row_sign[i] = -1;
    // After sign fixing, a +1 slack column can serve as the initial basis.
    const bool slack_usable =
        (src.rel == Rel::LE && !neg) || (src.rel == Rel::GE && neg);
    needs_artificial[i] = !slack_usable;
  }
  int total = sc + nslack;
  std::vector<int> init_col(m);  // the column holding B^{-1} for this row
  {
    int slack_at = sc;
    int art_at = sc + nslack;
    for (int i = 0; i < m; ++i) {
      if (needs_artificial[i]) {
        init_col[i] = art_at++;
        ++total;
      }
    }
  }

  std::vector<RatVec> rows(m);
  RatVec rhs(m);
  std::vector<int> basis(m);
  std::vector<bool> artificial(total, false);
  int slack_at = sc;
  for (int i = 0; i < m; ++i) {
    const auto& src = prob.rows[i];
    RatVec row(total, Rat(0));
    for (int j = 0; j < n; ++j) {
      row[col_pos[j]] = row_sign[i] * src.coeffs[j];
      if (col_neg[j] >= 0) row[col_neg[j]] = -row_sign[i] * src.coeffs[j];
    }
    if (src.rel != Rel::EQ) {
      const int own_slack = slack_at++;
      row[own_slack] = row_sign[i] * (src.rel == Rel::LE ? 1 : -1);
      if (!needs_artificial[i]) init_col[i] = own_slack;
    }
    if (needs_artificial[i]) {
      row[init_col[i]] = 1;
      artificial[init_col[i]] = true;
    }
    basis[i] = init_col[i];
    rows[i] = std::move(row);
    rhs[i] = row_sign[i] * src.rhs;
  }

  Tableau t(std::move(rows), std::move(rhs), std::move(basis),
            std::move(artificial));

  // Phase 1: minimize the sum of basic artificials.
  bool need_phase1 = false;
  RatVec cost1(total, Rat(0));
  for (int i = 0; i < m; ++i) {
    if (needs_artificial[i]) {
      cost1[init_col[i]] = 1;
      need_phase1 = true;
    }
  }
  if (need_phase1) {
    t.run(cost1);
    if (t.objective(cost1) > 0) {
      // Farkas multipliers y = c_B B^{-1}, read off the initial unit
      // columns and mapped back through the row sign flips.
      LpResult res;
      res.status = LpStatus::Infeasible;
      res.farkas.resize(m);
      for (int i = 0; i < m; ++i) {
        Rat y = 0;
        for (int r = 0; r < t.rows(); ++r)
          if (cost1[t.basis()[r]] != 0) y += t.at(r, init_col[i]);
        res.farkas[i] = row_sign[i] * y;
      }
      return res;
    }
    t.drive_out_artificials();
  }

  // Phase 2.
  RatVec cost2(total, Rat(0));
  const Rat flip = sense == LpSense::Max ? Rat(-1) : Rat(1);
  for (int j = 0; j < n; ++j) {
    cost2[col_pos[j]] = flip * objective[j];
    if (col_neg[j] >= 0) cost2[col_neg[j]] = -flip * objective[j];
  }
  if (!t.run(cost2)) {
    LpResult res;
    res.status = LpStatus::Unbounded;
    return res;
  }

  RatVec xstd(total, Rat(0));
  for (int r = 0; r < t.rows(); ++r) xstd[t.basis()[r]] = t.rhs(r);
  LpResult res;
  res.status = LpStatus::Optimal;
  res.point.resize(n);
  for (int j = 0; j < n; ++j) {
    res.point[j] = xstd[col_pos[j]];
    if (col_neg[j] >= 0) res.point[j] -= xstd[col_neg[j]];
  }
  res.value = dot(objective, res.point);
  return res;
}

LpResult lp_solve(const RatVec& objective, const IneqSystem& sys, LpSense sense) {
  if (static_cast<int>(objective.size()) != sys.dim)
    throw std::invalid_argument("lp_solve: objective dimension mismatch");
  LpProblem prob;
  prob.num_vars = sys.dim;
  for (const auto& r : sys.rows)
    prob.rows.push_back(LpConstraint{r.coeffs, Rel::LE, r.rhs});
  return solve_lp(prob, objective, sense);
}

}  // namespace icx
