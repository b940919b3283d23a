// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icx/inequality_system.hpp"
#include "icx/polytope.hpp"
#include "icx/rational.hpp"
#include "icx/zfunction.hpp"

namespace icx {

// Conjugacy here always works with finite effective domains, whose closed
// convex hulls are rational polytopes by construction; no separate
// polyhedrality hypothesis is tracked anywhere.

/// f*(p) = max over dom f of <p, x> - f(x); finite because dom f is.
Int integral_conjugate(const ZFunction& f, const ZPoint& p);

/// Table of f* on the integer box [lo, hi].
ZFunction conjugate_table(const ZFunction& f, const ZPoint& lo, const ZPoint& hi);

/// H-description of the real subdifferential at x: one row
/// <y - x, p> <= f(y) - f(x) per generating y. local restricts y to the
/// unit neighborhood of x (valid for integrally convex f), giving rows
/// with coefficients in {-1,0,+1}.
struct SubdifferentialHRep {
  IneqSystem system;
  ZPoint anchor;
};
SubdifferentialHRep real_subdifferential_hrep(const ZFunction& f, const ZPoint& x,
                                              bool local);

/// An integer subgradient at x together with the exhaustive count of
/// domain rows it was verified against.
struct SubgradientCertificate {
  ZPoint x;
  ZPoint p;
  long verified_rows = 0;
};

/// Checks <p, y - x> <= f(y) - f(x) over all of dom f.
bool verify_subgradient(const ZFunction& f, const ZPoint& x, const ZPoint& p);

/// Exact record of why the integer system A p <= b has no solution: every
/// branch of the variable-by-variable search pinches to an interval with
/// no integer (empty_stages), or the real system is already empty.
struct IntegerInfeasibilityProof {
  struct Branch {
    int var = 0;             // variable whose interval excluded all integers
    std::vector<Int> tail;   // chosen values for the later variables
    ExtVal lo, hi;           // the pinched real interval
  };
  std::vector<Branch> branches;
  long branches_total = 0;  // may exceed branches.size() when capped
  bool real_infeasible = false;
  std::string str() const;
};

struct SubdifferentialDecision {
  bool nonempty = false;
  std::optional<SubgradientCertificate> certificate;
  std::optional<IntegerInfeasibilityProof> proof;
};

/// Decides whether the integer subdifferential at x is nonempty. A found
/// p is verified exhaustively over dom f; emptiness comes with an exact
/// elimination-based proof.
SubdifferentialDecision integral_subdifferential_nonempty(const ZFunction& f,
                                                          const ZPoint& x);

/// Integer feasibility of an arbitrary rational system A p <= b, decided
/// by general elimination plus backtracking over the per-variable integer
/// intervals. Throws when the instance forces an unbounded search.
struct IntegerFeasibility {
  bool feasible = false;
  std::optional<ZPoint> point;
  std::optional<IntegerInfeasibilityProof> proof;
};
IntegerFeasibility integer_feasible(const IneqSystem& sys);

/// f**(x) with certificate: either an attaining p (value finite), or a
/// separating direction proving +inf outside conv(dom f).
struct BiconjugateResult {
  ExtVal value;
  std::optional<ZPoint> attaining_p;
  std::optional<Separation> separation;
  bool via_subgradient = false;
  Int search_bound = 0;  // nonzero when the bounded search ran
};
BiconjugateResult integral_biconjugate_full(const ZFunction& f, const ZPoint& x);
ExtVal integral_biconjugate(const ZFunction& f, const ZPoint& x);

/// Conjugate-side property suite for integrally convex f, exercised at
/// sampled integer p: the conjugate/subgradient identity at an argmax,
/// biconjugacy there, and the symmetric subgradient membership checked
/// exhaustively over a conjugate box of radius box_radius around p.
struct Lemma32Report {
  struct Entry {
    ZPoint p;
    ZPoint argmax_x;
    bool identity_holds = false;    // f(x) + f*(p) = <p, x>
    bool biconjugacy_holds = false; // f**(x) = f(x)
    bool symmetry_holds = false;    // x is an integer subgradient of f* at p
  };
  std::vector<Entry> entries;
  bool all_pass = true;
};
Lemma32Report conjugate_subgradient_suite(const ZFunction& f,
                                          const std::vector<ZPoint>& sample_p,
                                          int box_radius = 1);

}  // namespace icx
