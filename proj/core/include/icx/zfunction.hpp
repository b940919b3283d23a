// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "icx/rational.hpp"

namespace icx {

/// Lattice point in Z^n.
using ZPoint = std::vector<Int>;

ZPoint zadd(const ZPoint& a, const ZPoint& b);
ZPoint zsub(const ZPoint& a, const ZPoint& b);
Int zdot(const ZPoint& a, const ZPoint& b);
RatVec to_ratvec(const ZPoint& z);
/// Exact integer part test + conversion; nullopt when any coord is fractional.
std::optional<ZPoint> to_zpoint(const RatVec& x);
std::string zpoint_to_string(const ZPoint& z);

/// Finite nonempty subset of Z^n.
struct ZSet {
  int dim = 0;
  std::set<ZPoint> points;

  bool contains(const ZPoint& p) const { return points.count(p) > 0; }
  /// Smallest box [lo, hi] containing the set.
  std::pair<ZPoint, ZPoint> bounding_box() const;
  std::vector<RatVec> rat_points() const;
};

/// Integer-valued function on Z^n with finite effective domain; points
/// absent from the table take the value +inf.
struct ZFunction {
  int dim = 0;
  std::map<ZPoint, Int> table;

  ExtVal value(const ZPoint& x) const {
    auto it = table.find(x);
    return it == table.end() ? ExtVal::plus_inf() : ExtVal(Rat(it->second));
  }
  bool in_dom(const ZPoint& x) const { return table.count(x) > 0; }
  ZSet domain() const;
  Int min_value() const;
  Int max_value() const;
};

/// delta_S: 0 on S, +inf elsewhere.
ZFunction indicator(const ZSet& s);

/// g(y) = f(y + x) - f(x), so g(0) = 0. Requires x in dom f.
ZFunction translate_to_origin(const ZFunction& f, const ZPoint& x);

/// Visits every integer point of the box [lo, hi] in lexicographic order.
void for_each_box_point(const ZPoint& lo, const ZPoint& hi,
                        const std::function<void(const ZPoint&)>& fn);

struct ParseError : std::runtime_error {
  int line;
  ParseError(int ln, const std::string& what)
      : std::runtime_error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

using Instance = std::variant<ZFunction, ZSet>;

/// Reads the instance text format; see serialize_instance for the shape.
/// Throws ParseError with a 1-based line number on malformed input.
Instance parse_instance(const std::string& text);

/// Canonical text form:
///   dim <n>
///   fn | set
///   <x1> ... <xn> : <value>     (fn records)
///   <x1> ... <xn>               (set records)
/// Records sorted lexicographically; '#' starts a comment on input.
std::string serialize_instance(const Instance& inst);

}  // namespace icx
