// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "icx/conjugacy.hpp"
#include "icx/dc.hpp"
#include "icx/fm_subgradient.hpp"
#include "icx/instances.hpp"
#include "test_support.hpp"

using namespace icx;
using namespace icx::test;

namespace {

const CorpusEntry& entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw std::logic_error("missing corpus entry " + name);
}

}  // namespace

TEST_CASE("identical functions have zero gap") {
  for (const auto& name : {"sep-squares", "abs-1d", "lnat-basic"}) {
    const auto& f = std::get<ZFunction>(entry(name).data);
    const auto rep = toland_singer(DcInstance{f, f});
    CHECK(rep.equal);
    CHECK(rep.primal == ExtVal(q(0)));
    CHECK(rep.dual == ExtVal(q(0)));
  }
}

TEST_CASE("two absolute values against one") {
  // Brute force over [-2,2]: min(2|x| - |x|) = 0 at x = 0, and the dual
  // candidates all evaluate to at least 0 with 0 attained.
  const auto& g = std::get<ZFunction>(entry("twoabs-1d").data);
  const auto& h = std::get<ZFunction>(entry("abs-1d").data);
  const auto rep = toland_singer(DcInstance{g, h});
  CHECK(rep.equal);
  CHECK(rep.primal == ExtVal(q(0)));
  REQUIRE(rep.primal_argmin.has_value());
  CHECK(*rep.primal_argmin == zp({0}));
}

TEST_CASE("indicator pairs and a linear tilt") {
  const auto& s = std::get<ZSet>(entry("rmconjic-set").data);
  const auto delta = indicator(s);
  SUBCASE("identical indicators") {
    const auto rep = toland_singer(DcInstance{delta, delta});
    CHECK(rep.equal);
    CHECK(rep.primal == ExtVal(q(0)));
  }
  SUBCASE("coordinate-sum tilt over the set") {
    // Values over the four points are 2, 2, 2, 1, so the primal is 1.
    ZFunction g = delta;
    for (auto& [x, v] : g.table) v += x[0] + x[1] + x[2] + x[3];
    const auto rep = toland_singer(DcInstance{g, delta});
    CHECK(rep.equal);
    CHECK(rep.primal == ExtVal(q(1)));
    REQUIRE(rep.primal_argmin.has_value());
    CHECK(*rep.primal_argmin == zp({0, 0, 0, 1}));
  }
}

TEST_CASE("the subgradient at the primal argmin attains the dual") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 4; ++trial) {
    const auto h = gen_lnat_random(2, zp({0, 0}), zp({3, 3}), rng());
    ZFunction g = gen_separable(2, zp({0, 0}), zp({3, 3}), rng());
    const auto rep = toland_singer(DcInstance{g, h});
    CHECK(rep.equal);
    REQUIRE(rep.primal_argmin.has_value());
    const ZPoint xstar = *rep.primal_argmin;
    const ZPoint pstar = fm_integer_subgradient(h, xstar).p;
    // The conjugate/subgradient identity at (x*, p*)...
    CHECK(Rat(h.table.at(xstar)) + Rat(integral_conjugate(h, pstar)) ==
          Rat(zdot(pstar, xstar)));
    // ...forces p* to attain the dual value exactly.
    REQUIRE(rep.primal.is_finite());
    CHECK(Rat(integral_conjugate(h, pstar)) - Rat(integral_conjugate(g, pstar)) ==
          rep.primal.finite());
  }
}

TEST_CASE("dual minimum is stable when the sample box is enlarged") {
  std::mt19937_64 rng(515151);
  const auto h = gen_lnat_random(2, zp({0, 0}), zp({2, 2}), rng());
  ZFunction g = gen_separable(2, zp({0, 0}), zp({2, 2}), rng());
  const auto small = toland_singer(DcInstance{g, h}, /*sample_radius=*/1);
  const auto large = toland_singer(DcInstance{g, h}, /*sample_radius=*/4);
  CHECK(small.dual == large.dual);
  CHECK(small.equal);
  CHECK(large.equal);
}

TEST_CASE("a point where only g is finite drives both sides to -inf") {
  ZFunction g;
  g.dim = 1;
  g.table.emplace(zp({0}), Int(0));
  g.table.emplace(zp({5}), Int(1));
  ZFunction h;
  h.dim = 1;
  h.table.emplace(zp({0}), Int(0));
  h.table.emplace(zp({1}), Int(0));
  const auto rep = toland_singer(DcInstance{g, h});
  CHECK(rep.primal.is_minus_inf());
  CHECK(rep.dual.is_minus_inf());
  CHECK(rep.equal);
  // Certify directly: along p = t, h*(p) - g*(p) = max(0,p) - max(0,5p-1)
  // decays without bound.
  for (long t : {2L, 10L, 50L}) {
    const Int diff = integral_conjugate(h, zp({t})) - integral_conjugate(g, zp({t}));
    CHECK(diff <= Int(1 - 4 * t));
  }
}

TEST_CASE("invalid instances are rejected") {
  const auto& star = std::get<ZFunction>(entry("exla1").data);
  const auto& habs = std::get<ZFunction>(entry("abs-1d").data);
  // h must be integrally convex.
  CHECK_THROWS_AS(toland_singer(DcInstance{star, star}), std::invalid_argument);
  // Domains must overlap.
  ZFunction far;
  far.dim = 1;
  far.table.emplace(zp({40}), Int(0));
  CHECK_THROWS_AS(toland_singer(DcInstance{far, habs}), std::invalid_argument);
}
