// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#include "icx/zfunction.hpp"

#include <sstream>

namespace icx {

ZPoint zadd(const ZPoint& a, const ZPoint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("zadd: dimension mismatch");
  ZPoint c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

ZPoint zsub(const ZPoint& a, const ZPoint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("zsub: dimension mismatch");
  ZPoint c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Int zdot(const ZPoint& a, const ZPoint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("zdot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec to_ratvec(const ZPoint& z) {
  RatVec v(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) v[i] = Rat(z[i]);
  return v;
}

std::optional<ZPoint> to_zpoint(const RatVec& x) {
  ZPoint z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_integral(x[i])) return std::nullopt;
    z[i] = rat_num(x[i]);
  }
  return z;
}

std::string zpoint_to_string(const ZPoint& z) {
  std::string s = "(";
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) s += ",";
    s += z[i].str();
  }
  return s + ")";
}

std::pair<ZPoint, ZPoint> ZSet::bounding_box() const {
  if (points.empty()) throw std::logic_error("ZSet: empty set has no box");
  ZPoint lo = *points.begin(), hi = *points.begin();
  for (const auto& p : points) {
    for (int i = 0; i < dim; ++i) {
      if (p[i] < lo[i]) lo[i] = p[i];
      if (p[i] > hi[i]) hi[i] = p[i];
    }
  }
  return {lo, hi};
}

std::vector<RatVec> ZSet::rat_points() const {
  std::vector<RatVec> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(to_ratvec(p));
  return out;
}

ZSet ZFunction::domain() const {
  ZSet s;
  s.dim = dim;
  for (const auto& [k, v] : table) s.points.insert(k);
  return s;
}

Int ZFunction::min_value() const {
  if (table.empty()) throw std::logic_error("ZFunction: empty table");
  Int m = table.begin()->second;
  for (const auto& [k, v] : table)
    if (v < m) m = v;
  return m;
}

Int ZFunction::max_value() const {
  if (table.empty()) throw std::logic_error("ZFunction: empty table");
  Int m = table.begin()->second;
  for (const auto& [k, v] : table)
    if (v > m) m = v;
  return m;
}

ZFunction indicator(const ZSet& s) {
  if (s.points.empty()) throw std::invalid_argument("indicator: empty set");
  ZFunction f;
  f.dim = s.dim;
  for (const auto& p : s.points) f.table.emplace(p, Int(0));
  return f;
}

ZFunction translate_to_origin(const ZFunction& f, const ZPoint& x) {
  auto it = f.table.find(x);
  if (it == f.table.end())
    throw std::invalid_argument("translate_to_origin: x not in dom f");
  const Int fx = it->second;
  ZFunction g;
  g.dim = f.dim;
  for (const auto& [k, v] : f.table) g.table.emplace(zsub(k, x), v - fx);
  return g;
}

void for_each_box_point(const ZPoint& lo, const ZPoint& hi,
                        const std::function<void(const ZPoint&)>& fn) {
  const int n = static_cast<int>(lo.size());
  for (int i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  ZPoint cur = lo;
  for (;;) {
    fn(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == hi[i]) {
      cur[i] = lo[i];
      --i;
    }
    if (i < 0) return;
    ++cur[i];
  }
}

namespace {

bool parse_int_token(const std::string& tok, Int& out) {
  if (tok.empty()) return false;
  std::size_t start = tok[0] == '-' || tok[0] == '+' ? 1 : 0;
  if (start == tok.size()) return false;
  for (std::size_t i = start; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  out = Int(tok);
  return true;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int dim = -1;
  int kind = -1;  // 0 = fn, 1 = set
  ZFunction fn;
  ZSet set;

  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const auto toks = tokenize(raw);
    if (toks.empty()) continue;

    if (dim < 0) {
      Int d;
      if (toks.size() != 2 || toks[0] != "dim" || !parse_int_token(toks[1], d) || d <= 0)
        throw ParseError(lineno, "expected 'dim <n>'");
      dim = static_cast<int>(d);
      continue;
    }
    if (kind < 0) {
      if (toks.size() != 1 || (toks[0] != "fn" && toks[0] != "set"))
        throw ParseError(lineno, "expected 'fn' or 'set'");
      kind = toks[0] == "fn" ? 0 : 1;
      fn.dim = set.dim = dim;
      continue;
    }

    if (kind == 0) {
      if (static_cast<int>(toks.size()) != dim + 2 || toks[dim] != ":")
        throw ParseError(lineno, "expected '<x1> ... <xn> : <value>'");
      ZPoint p(dim);
      for (int i = 0; i < dim; ++i)
        if (!parse_int_token(toks[i], p[i]))
          throw ParseError(lineno, "bad integer '" + toks[i] + "'");
      Int v;
      if (!parse_int_token(toks[dim + 1], v))
        throw ParseError(lineno, "bad integer '" + toks[dim + 1] + "'");
      if (!fn.table.emplace(std::move(p), std::move(v)).second)
        throw ParseError(lineno, "duplicate point");
    } else {
      if (static_cast<int>(toks.size()) != dim)
        throw ParseError(lineno, "expected " + std::to_string(dim) + " coordinates");
      ZPoint p(dim);
      for (int i = 0; i < dim; ++i)
        if (!parse_int_token(toks[i], p[i]))
          throw ParseError(lineno, "bad integer '" + toks[i] + "'");
      if (!set.points.insert(std::move(p)).second)
        throw ParseError(lineno, "duplicate point");
    }
  }
  if (dim < 0) throw ParseError(lineno, "missing 'dim <n>' header");
  if (kind < 0) throw ParseError(lineno, "missing 'fn'/'set' header");
  if (kind == 0) {
    if (fn.table.empty()) throw ParseError(lineno, "function has empty domain");
    return fn;
  }
  if (set.points.empty()) throw ParseError(lineno, "set is empty");
  return set;
}

std::string serialize_instance(const Instance& inst) {
  std::string out;
  if (std::holds_alternative<ZFunction>(inst)) {
    const auto& f = std::get<ZFunction>(inst);
    out = "dim " + std::to_string(f.dim) + "\nfn\n";
    for (const auto& [p, v] : f.table) {
      for (int i = 0; i < f.dim; ++i) out += p[i].str() + " ";
      out += ": " + v.str() + "\n";
    }
  } else {
    const auto& s = std::get<ZSet>(inst);
    out = "dim " + std::to_string(s.dim) + "\nset\n";
    for (const auto& p : s.points) {
      for (int i = 0; i < s.dim; ++i) {
        if (i) out += " ";
        out += p[i].str();
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace icx
