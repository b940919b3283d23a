// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "icx/checker.hpp"
#include "icx/instances.hpp"
#include "icx/zfunction.hpp"
#include "test_support.hpp"

using namespace icx;
using namespace icx::test;

TEST_CASE("parse_instance reads the function format") {
  const std::string text =
      "dim 3\n"
      "fn\n"
      "# the four-point function with a half-integral subdifferential vertex\n"
      "0 0 0 : 0\n"
      "1 1 0 : 1\n"
      "0 1 1 : 1\n"
      "1 0 1 : 1\n";
  const auto inst = parse_instance(text);
  REQUIRE(std::holds_alternative<ZFunction>(inst));
  const auto& f = std::get<ZFunction>(inst);
  CHECK(f.dim == 3);
  CHECK(f.table.size() == 4);
  CHECK(f.table.at(zp({0, 0, 0})) == 0);
  CHECK(f.table.at(zp({1, 1, 0})) == 1);
  CHECK(f.table.at(zp({0, 1, 1})) == 1);
  CHECK(f.table.at(zp({1, 0, 1})) == 1);
}

TEST_CASE("parse_instance reads the set format") {
  const auto inst = parse_instance("dim 1\nset\n0\n");
  REQUIRE(std::holds_alternative<ZSet>(inst));
  const auto& s = std::get<ZSet>(inst);
  CHECK(s.dim == 1);
  CHECK(s.points.size() == 1);
  CHECK(s.contains(zp({0})));
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("duplicate point") {
    try {
      parse_instance("dim 2\nset\n0 0\n1 1\n0 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 5);
    }
  }
  SUBCASE("inconsistent dimension") {
    try {
      parse_instance("dim 2\nfn\n0 0 : 1\n0 1 2 : 1\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 4);
    }
  }
  SUBCASE("malformed value") {
    CHECK_THROWS_AS(parse_instance("dim 1\nfn\n0 : x\n"), ParseError);
  }
  SUBCASE("missing header") {
    CHECK_THROWS_AS(parse_instance("fn\n0 : 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("dim 1\n0\n"), ParseError);
  }
  SUBCASE("empty instance") {
    CHECK_THROWS_AS(parse_instance("dim 1\nset\n"), ParseError);
  }
}

TEST_CASE("parse then serialize is the identity on the bundled corpus") {
  for (const auto& entry : corpus()) {
    const std::string text = serialize_instance(entry.data);
    const auto reparsed = parse_instance(text);
    CHECK(serialize_instance(reparsed) == text);
    if (std::holds_alternative<ZFunction>(entry.data)) {
      REQUIRE(std::holds_alternative<ZFunction>(reparsed));
      CHECK(std::get<ZFunction>(reparsed).table == std::get<ZFunction>(entry.data).table);
    } else {
      REQUIRE(std::holds_alternative<ZSet>(reparsed));
      CHECK(std::get<ZSet>(reparsed).points == std::get<ZSet>(entry.data).points);
    }
  }
}

TEST_CASE("translate_to_origin") {
  SUBCASE("one-dimensional shift") {
    ZFunction f;
    f.dim = 1;
    f.table.emplace(zp({1}), Int(5));
    f.table.emplace(zp({2}), Int(7));
    const auto g = translate_to_origin(f, zp({1}));
    CHECK(g.table.at(zp({0})) == 0);
    CHECK(g.table.at(zp({1})) == 2);
  }
  SUBCASE("translating by a domain point with value zero is the identity") {
    ZFunction f;
    f.dim = 2;
    f.table.emplace(zp({0, 0}), Int(0));
    f.table.emplace(zp({1, 0}), Int(3));
    const auto g = translate_to_origin(f, zp({0, 0}));
    CHECK(g.table == f.table);
  }
  SUBCASE("star function shifted to a nonzero domain point") {
    // Direct table shift of the seven-point star by (1,1,0).
    const auto& f = std::get<ZFunction>(corpus()[0].data);
    REQUIRE(corpus()[0].name == "exla1");
    const auto g = translate_to_origin(f, zp({1, 1, 0}));
    CHECK(g.table.at(zp({0, 0, 0})) == 0);
    CHECK(g.table.at(zp({-1, -1, 0})) == -1);
    CHECK(g.table.at(zp({-1, 0, 1})) == 0);
    CHECK(g.table.at(zp({0, -1, 1})) == 0);
    CHECK(g.table.at(zp({-2, -2, 0})) == -2);
    CHECK(g.table.at(zp({-1, -2, -1})) == -2);
    CHECK(g.table.at(zp({-2, -1, -1})) == -2);
    CHECK(g.table.size() == 7);
  }
  SUBCASE("x outside the domain is rejected") {
    ZFunction f;
    f.dim = 1;
    f.table.emplace(zp({0}), Int(0));
    CHECK_THROWS_AS(translate_to_origin(f, zp({5})), std::invalid_argument);
  }
}

TEST_CASE("translation preserves the integral convexity verdict") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 8; ++trial) {
    const auto f = gen_separable(2, zp({0, 0}), zp({3, 3}), rng());
    const auto base = is_integrally_convex_function(f).is_ic;
    for (const auto& [x, fx] : f.table) {
      const auto g = translate_to_origin(f, x);
      CHECK(is_integrally_convex_function(g).is_ic == base);
      break;  // one interior translation per instance keeps this quick
    }
  }
  // A non-IC instance stays non-IC under translation.
  const auto& star = std::get<ZFunction>(corpus()[0].data);
  const auto shifted = translate_to_origin(star, zp({1, 1, 0}));
  CHECK(!is_integrally_convex_function(shifted).is_ic);
}

TEST_CASE("indicator functions") {
  SUBCASE("four-point set") {
    ZSet s;
    s.dim = 4;
    s.points = {zp({1, 1, 0, 0}), zp({0, 1, 1, 0}), zp({1, 0, 1, 0}), zp({0, 0, 0, 1})};
    const auto d = indicator(s);
    CHECK(d.table.size() == 4);
    for (const auto& [k, v] : d.table) CHECK(v == 0);
  }
  SUBCASE("singleton") {
    ZSet s;
    s.dim = 2;
    s.points = {zp({3, -1})};
    const auto d = indicator(s);
    CHECK(d.table.size() == 1);
    CHECK(d.table.at(zp({3, -1})) == 0);
  }
  SUBCASE("domain extraction inverts the indicator") {
    ZSet s;
    s.dim = 2;
    s.points = {zp({0, 0}), zp({1, 2}), zp({-1, 1})};
    CHECK(indicator(s).domain().points == s.points);
  }
}
