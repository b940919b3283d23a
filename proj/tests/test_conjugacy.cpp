// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "icx/checker.hpp"
#include "icx/conjugacy.hpp"
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

Int iabs(const Int& v) { return v < 0 ? Int(-v) : v; }

// Closed form of the star function's conjugate:
// max{0, |p1+p2-1|, |p2+p3-1|, |p3+p1-1|}.
Int star_conjugate(const ZPoint& p) {
  Int m = 0;
  const Int a = iabs(p[0] + p[1] - 1), b = iabs(p[1] + p[2] - 1), c = iabs(p[2] + p[0] - 1);
  if (a > m) m = a;
  if (b > m) m = b;
  if (c > m) m = c;
  return m;
}

}  // namespace

TEST_CASE("integral conjugate point values") {
  const auto delta = indicator(std::get<ZSet>(entry("rmconjic-set").data));
  CHECK(integral_conjugate(delta, zp({1, 1, 1, 2})) == 2);
  CHECK(integral_conjugate(delta, zp({0, 0, 0, 0})) == 0);
  const auto& star = std::get<ZFunction>(entry("exla1").data);
  CHECK(integral_conjugate(star, zp({0, 0, 0})) == 1);
}

TEST_CASE("conjugate tables") {
  SUBCASE("indicator of the origin has an identically zero conjugate") {
    ZSet origin;
    origin.dim = 1;
    origin.points = {zp({0})};
    const auto table = conjugate_table(indicator(origin), zp({-2}), zp({2}));
    CHECK(table.table.size() == 5);
    for (const auto& [p, v] : table.table) CHECK(v == 0);
  }
  SUBCASE("star conjugate matches its closed form on a box") {
    const auto& star = std::get<ZFunction>(entry("exla1").data);
    const auto table = conjugate_table(star, zp({-1, -1, -1}), zp({2, 2, 2}));
    CHECK(table.table.size() == 64);
    for (const auto& [p, v] : table.table) CHECK(v == star_conjugate(p));
  }
  SUBCASE("one-dimensional squares") {
    ZFunction f;
    f.dim = 1;
    for_each_box_point(zp({-2}), zp({2}), [&](const ZPoint& x) {
      f.table.emplace(x, x[0] * x[0]);
    });
    // Brute force over the five domain points gives max 3x - x^2 = 2.
    CHECK(integral_conjugate(f, zp({3})) == 2);
  }
  SUBCASE("empty box rejected") {
    const auto& star = std::get<ZFunction>(entry("exla1").data);
    CHECK_THROWS_AS(conjugate_table(star, zp({1, 1, 1}), zp({0, 0, 0})),
                    std::invalid_argument);
  }
  SUBCASE("conjugate values are convex along coordinate lines") {
    const auto f = gen_lnat_random(2, zp({0, 0}), zp({3, 3}), 1234);
    const auto table = conjugate_table(f, zp({-4, -4}), zp({4, 4}));
    for (const auto& [p, v] : table.table) {
      for (int j = 0; j < 2; ++j) {
        ZPoint lo = p, hi = p;
        --lo[j];
        ++hi[j];
        if (!table.in_dom(lo) || !table.in_dom(hi)) continue;
        CHECK(table.table.at(lo) + table.table.at(hi) >= 2 * v);
      }
    }
  }
}

TEST_CASE("real subdifferential H-descriptions") {
  SUBCASE("local rows at the origin of the four-point function") {
    const auto& f = std::get<ZFunction>(entry("rmsubg").data);
    const auto rep = real_subdifferential_hrep(f, zp({0, 0, 0}), /*local=*/true);
    REQUIRE(rep.system.rows.size() == 3);
    const auto norm = normalized(rep.system);
    CHECK(norm.rows[0].coeffs == rv({0, 1, 1}));
    CHECK(norm.rows[1].coeffs == rv({1, 0, 1}));
    CHECK(norm.rows[2].coeffs == rv({1, 1, 0}));
    for (const auto& r : norm.rows) CHECK(r.rhs == q(1));
  }
  SUBCASE("global rows at the origin of the star") {
    const auto& f = std::get<ZFunction>(entry("exla1").data);
    const auto rep = real_subdifferential_hrep(f, zp({0, 0, 0}), /*local=*/false);
    CHECK(rep.system.rows.size() == 6);
    CHECK(rep.system.satisfied_by(rvq({{1, 2}, {1, 2}, {1, 2}})));
    CHECK(!rep.system.satisfied_by(rv({0, 0, 0})));
    CHECK(!rep.system.satisfied_by(rv({1, 0, 0})));
  }
  SUBCASE("zero function on a box pins the origin") {
    ZFunction f;
    f.dim = 2;
    for_each_box_point(zp({-1, -1}), zp({1, 1}), [&](const ZPoint& x) {
      f.table.emplace(x, Int(0));
    });
    const auto rep = real_subdifferential_hrep(f, zp({0, 0}), /*local=*/true);
    CHECK(rep.system.satisfied_by(rv({0, 0})));
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        if (a || b) CHECK(!rep.system.satisfied_by(rv({a, b})));
  }
  SUBCASE("x outside the domain is rejected") {
    const auto& f = std::get<ZFunction>(entry("rmsubg").data);
    CHECK_THROWS_AS(real_subdifferential_hrep(f, zp({9, 9, 9}), true),
                    std::invalid_argument);
  }
}

TEST_CASE("integer subdifferential decisions") {
  SUBCASE("empty at the star origin, with a pinched-interval proof") {
    const auto& f = std::get<ZFunction>(entry("exla1").data);
    const auto dec = integral_subdifferential_nonempty(f, zp({0, 0, 0}));
    CHECK(!dec.nonempty);
    REQUIRE(dec.proof.has_value());
    CHECK(!dec.proof->real_infeasible);
    REQUIRE(dec.proof->branches.size() == 1);
    const auto& br = dec.proof->branches[0];
    CHECK(br.lo == ExtVal(q(1, 2)));
    CHECK(br.hi == ExtVal(q(1, 2)));
    CHECK(dec.proof->str().find("no integer") != std::string::npos);
  }
  SUBCASE("nonempty at the origin of the four-point function") {
    const auto& f = std::get<ZFunction>(entry("rmsubg").data);
    const auto dec = integral_subdifferential_nonempty(f, zp({0, 0, 0}));
    REQUIRE(dec.nonempty);
    const auto& cert = *dec.certificate;
    CHECK(verify_subgradient(f, zp({0, 0, 0}), cert.p));
    CHECK(cert.verified_rows == 3);
    // (0,1,0) is a subgradient: checked by hand against the three rows.
    CHECK(verify_subgradient(f, zp({0, 0, 0}), zp({0, 1, 0})));
  }
  SUBCASE("nonempty everywhere on IC instances") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 4; ++trial) {
      const auto f = gen_separable(2, zp({-2, -2}), zp({2, 2}), rng());
      for (const auto& [x, fx] : f.table)
        CHECK(integral_subdifferential_nonempty(f, x).nonempty);
    }
  }
  SUBCASE("x outside the domain is rejected") {
    const auto& f = std::get<ZFunction>(entry("rmsubg").data);
    CHECK_THROWS_AS(integral_subdifferential_nonempty(f, zp({5, 5, 5})),
                    std::invalid_argument);
  }
}

TEST_CASE("integral biconjugates") {
  SUBCASE("the star has a gap of one at the origin") {
    const auto& f = std::get<ZFunction>(entry("exla1").data);
    const auto res = integral_biconjugate_full(f, zp({0, 0, 0}));
    REQUIRE(res.value.is_finite());
    CHECK(res.value.finite() == q(-1));
    CHECK(!res.via_subgradient);
    CHECK(res.search_bound > 0);
    // The attaining p certifies the value against the exact conjugate.
    REQUIRE(res.attaining_p.has_value());
    CHECK(Rat(zdot(*res.attaining_p, zp({0, 0, 0}))) -
              Rat(integral_conjugate(f, *res.attaining_p)) ==
          q(-1));
  }
  SUBCASE("outside the hull the value is +inf with a separating direction") {
    ZSet origin;
    origin.dim = 2;
    origin.points = {zp({0, 0})};
    const auto res = integral_biconjugate_full(indicator(origin), zp({1, 0}));
    CHECK(res.value.is_plus_inf());
    REQUIRE(res.separation.has_value());
    CHECK(res.separation->direction[0] > 0);
  }
  SUBCASE("IC instances are biconjugate-exact on their domain") {
    std::mt19937_64 rng(909);
    const auto f = gen_lnat_random(2, zp({0, 0}), zp({2, 2}), rng());
    for (const auto& [x, fx] : f.table) {
      const auto res = integral_biconjugate_full(f, x);
      CHECK(res.via_subgradient);
      REQUIRE(res.value.is_finite());
      CHECK(res.value.finite() == Rat(fx));
    }
  }
  SUBCASE("holes make the biconjugate finite off the domain") {
    const auto d = indicator(std::get<ZSet>(entry("holey-pair").data));
    const auto res = integral_biconjugate_full(d, zp({1}));
    REQUIRE(res.value.is_finite());
    CHECK(res.value.finite() == q(0));  // the hull point inherits value 0
    CHECK(integral_biconjugate(d, zp({0})) == ExtVal(q(0)));
  }
}

TEST_CASE("subdifferential nonemptiness is equivalent to biconjugate exactness") {
  // Both directions, on a mix of IC and non-IC instances.
  for (const auto& name : {"exla1", "rmsubg", "rmconjic-g", "sep-squares", "holey-pair",
                           "rmfbbf-rational", "rmedgedir"}) {
    const auto& e = entry(name);
    const ZFunction f = std::holds_alternative<ZFunction>(e.data)
                            ? std::get<ZFunction>(e.data)
                            : indicator(std::get<ZSet>(e.data));
    for (const auto& [x, fx] : f.table) {
      const bool nonempty = integral_subdifferential_nonempty(f, x).nonempty;
      const bool exact = integral_biconjugate(f, x) == ExtVal(Rat(fx));
      CHECK(nonempty == exact);
    }
  }
}

TEST_CASE("weak duality holds at sampled pairs") {
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<long> coord(-4, 4);
  for (const auto& name : {"exla1", "rmsubg", "sep-squares"}) {
    const ZFunction& f = std::get<ZFunction>(entry(name).data);
    for (int s = 0; s < 25; ++s) {
      ZPoint p(f.dim);
      for (int i = 0; i < f.dim; ++i) p[i] = coord(rng);
      const Int fstar = integral_conjugate(f, p);
      for (const auto& [x, fx] : f.table) CHECK(fx + fstar >= zdot(p, x));
    }
  }
}

TEST_CASE("conjugate subgradient suite") {
  SUBCASE("indicator at the zero price") {
    const auto delta = indicator(std::get<ZSet>(entry("rmconjic-set").data));
    const auto rep = conjugate_subgradient_suite(delta, {zp({0, 0, 0, 0})});
    CHECK(rep.all_pass);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].identity_holds);
    CHECK(rep.entries[0].biconjugacy_holds);
    CHECK(rep.entries[0].symmetry_holds);
  }
  SUBCASE("four-point function at p = (0,1,0)") {
    const auto& f = std::get<ZFunction>(entry("rmsubg").data);
    // Brute force over the four domain points: <p,x> - f(x) equals
    // 0, 0, 0, -1, so f*(p) = 0 and the smallest argmax is the origin.
    CHECK(integral_conjugate(f, zp({0, 1, 0})) == 0);
    const auto rep = conjugate_subgradient_suite(f, {zp({0, 1, 0})});
    CHECK(rep.all_pass);
    CHECK(rep.entries[0].argmax_x == zp({0, 0, 0}));
  }
  SUBCASE("random prices on IC instances") {
    std::mt19937_64 rng(111);
    std::uniform_int_distribution<long> coord(-3, 3);
    for (int trial = 0; trial < 3; ++trial) {
      const auto f = gen_separable(2, zp({-1, -1}), zp({2, 2}), rng());
      std::vector<ZPoint> ps;
      for (int s = 0; s < 10; ++s) ps.push_back({Int(coord(rng)), Int(coord(rng))});
      CHECK(conjugate_subgradient_suite(f, ps).all_pass);
    }
  }
}
