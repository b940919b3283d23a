// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#include "icx/instances.hpp"

#include <random>
#include <sstream>

#include "icx/checker.hpp"
#include "icx/conjugacy.hpp"

namespace icx {

namespace {

ZSet make_set(int dim, std::initializer_list<std::initializer_list<long>> pts) {
  ZSet s;
  s.dim = dim;
  for (const auto& p : pts) {
    ZPoint z;
    for (long c : p) z.push_back(Int(c));
    s.points.insert(std::move(z));
  }
  return s;
}

ZFunction tabulate(const ZPoint& lo, const ZPoint& hi,
                   const std::function<Int(const ZPoint&)>& fn) {
  ZFunction f;
  f.dim = static_cast<int>(lo.size());
  for_each_box_point(lo, hi, [&](const ZPoint& x) { f.table.emplace(x, fn(x)); });
  return f;
}

Int iabs(const Int& v) { return v < 0 ? Int(-v) : v; }

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> entries;

  // Seven-point star set around the origin; values are half the
  // coordinate sum. Its integer subdifferential at the origin is empty
  // even though the real one is not.
  const ZSet star = make_set(3, {{0, 0, 0},
                                 {1, 1, 0},
                                 {-1, -1, 0},
                                 {0, 1, 1},
                                 {0, -1, -1},
                                 {1, 0, 1},
                                 {-1, 0, -1}});
  {
    ZFunction f;
    f.dim = 3;
    for (const auto& p : star.points) f.table.emplace(p, Int((p[0] + p[1] + p[2]) / 2));
    CorpusEntry e;
    e.name = "exla1";
    e.note = "half-sum on a symmetric 7-point star; no integer subgradient at 0";
    e.data = std::move(f);
    e.expected = {{"is_ic", "false"},
                  {"subgrad@0 0 0", "empty"},
                  {"conj@0 0 0", "1"},
                  {"biconj@0 0 0", "-1"}};
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "exla1-set";
    e.note = "domain of exla1: hole-free but not integrally convex";
    e.data = star;
    e.expected = {{"is_ic", "false"}, {"hole_free", "true"}};
    entries.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "rmconjic-set";
    e.note = "four 0/1 points whose indicator has a non-integrally-convex conjugate";
    e.data = make_set(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}});
    e.expected = {{"is_ic", "true"}, {"hole_free", "true"}};
    entries.push_back(std::move(e));
  }
  {
    // max{p1+p2, p2+p3, p1+p3, p4} on [0,1]^3 x [0,2]: the conjugate of
    // the rmconjic-set indicator, materialized.
    ZPoint lo(4, Int(0)), hi{Int(1), Int(1), Int(1), Int(2)};
    ZFunction g = tabulate(lo, hi, [](const ZPoint& p) {
      Int m = p[0] + p[1];
      if (p[1] + p[2] > m) m = p[1] + p[2];
      if (p[0] + p[2] > m) m = p[0] + p[2];
      if (p[3] > m) m = p[3];
      return m;
    });
    CorpusEntry e;
    e.name = "rmconjic-g";
    e.note = "pairwise-max polyhedral function; fails the midpoint bound at 5/4 vs 1";
    e.data = std::move(g);
    e.expected = {{"is_ic", "false"}};
    entries.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "rmedgedir";
    e.note = "lattice parallelogram: integral hull and unit edge directions, yet not IC";
    e.data = make_set(3, {{0, 0, 0}, {1, 0, 1}, {1, 1, -1}, {2, 1, 0}});
    e.expected = {{"is_ic", "false"},
                  {"hole_free", "true"},
                  {"hull_integral", "true"},
                  {"directions_pm1", "true"}};
    entries.push_back(std::move(e));
  }

  {
    ZFunction f;
    f.dim = 3;
    f.table.emplace(ZPoint{Int(0), Int(0), Int(0)}, Int(0));
    f.table.emplace(ZPoint{Int(1), Int(1), Int(0)}, Int(1));
    f.table.emplace(ZPoint{Int(0), Int(1), Int(1)}, Int(1));
    f.table.emplace(ZPoint{Int(1), Int(0), Int(1)}, Int(1));
    CorpusEntry e;
    e.name = "rmsubg";
    e.note = "IC function whose real subdifferential at 0 has a half-integral vertex";
    e.data = std::move(f);
    e.expected = {{"is_ic", "true"}, {"subgrad@0 0 0", "nonempty"}};
    entries.push_back(std::move(e));
  }

  {
    // Rational-slope half-plane 2*x2 >= 3*x1 - 1 clipped to [0,4]^2.
    // Adapted stand-in: the unclipped original uses an irrational slope,
    // which exact arithmetic cannot carry; clipping keeps the set
    // hole-free, so only the non-IC verdict survives the adaptation.
    ZSet s;
    s.dim = 2;
    for_each_box_point(ZPoint(2, Int(0)), ZPoint(2, Int(4)), [&](const ZPoint& x) {
      if (2 * x[1] >= 3 * x[0] - 1) s.points.insert(x);
    });
    CorpusEntry e;
    e.name = "rmfbbf-rational";
    e.note = "clipped rational half-plane (adapted): hole-free, not integrally convex";
    e.data = std::move(s);
    e.expected = {{"is_ic", "false"}, {"hole_free", "true"}};
    entries.push_back(std::move(e));
  }

  {
    ZSet s;
    s.dim = 3;
    for_each_box_point(ZPoint(3, Int(0)), ZPoint(3, Int(1)),
                       [&](const ZPoint& x) { s.points.insert(x); });
    CorpusEntry e;
    e.name = "unit-box";
    e.note = "the 0/1 cube";
    e.data = std::move(s);
    e.expected = {{"is_ic", "true"}, {"hole_free", "true"}};
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "unit-box-zero";
    e.note = "identically zero on the 0/1 cube";
    e.data = tabulate(ZPoint(3, Int(0)), ZPoint(3, Int(1)),
                      [](const ZPoint&) { return Int(0); });
    e.expected = {{"is_ic", "true"}, {"minimizer@0 0 0", "true"}};
    entries.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "sep-squares";
    e.note = "x1^2 + x2^2 on [-2,2]^2";
    e.data = tabulate(ZPoint(2, Int(-2)), ZPoint(2, Int(2)),
                      [](const ZPoint& x) { return Int(x[0] * x[0] + x[1] * x[1]); });
    e.expected = {{"is_ic", "true"},
                  {"minimizer@0 0", "true"},
                  {"minimizer@1 0", "false"},
                  {"biconj@0 0", "0"},
                  {"subgrad@0 0", "nonempty"}};
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "sep-abs";
    e.note = "|x1| + |x2| on [-3,3]^2";
    e.data = tabulate(ZPoint(2, Int(-3)), ZPoint(2, Int(3)),
                      [](const ZPoint& x) { return Int(iabs(x[0]) + iabs(x[1])); });
    e.expected = {{"is_ic", "true"}, {"minimizer@0 0", "true"}};
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "lnat-basic";
    e.note = "|x1 - x2| on [0,2]^2";
    e.data = tabulate(ZPoint(2, Int(0)), ZPoint(2, Int(2)),
                      [](const ZPoint& x) { return iabs(x[0] - x[1]); });
    e.expected = {{"is_ic", "true"}};
    entries.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "holey-pair";
    e.note = "{0, 3} on the line: the hull has interior lattice points";
    e.data = make_set(1, {{0}, {3}});
    e.expected = {{"is_ic", "false"}, {"hole_free", "false"}};
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "abs-1d";
    e.note = "|x| on [-2,2]";
    e.data = tabulate(ZPoint(1, Int(-2)), ZPoint(1, Int(2)),
                      [](const ZPoint& x) { return iabs(x[0]); });
    e.expected = {{"is_ic", "true"}, {"minimizer@0", "true"}};
    entries.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "twoabs-1d";
    e.note = "2|x| on [-2,2]";
    e.data = tabulate(ZPoint(1, Int(-2)), ZPoint(1, Int(2)),
                      [](const ZPoint& x) { return Int(2 * iabs(x[0])); });
    e.expected = {{"is_ic", "true"}};
    entries.push_back(std::move(e));
  }
  return entries;
}

ZPoint parse_coords(const std::string& s) {
  ZPoint p;
  std::istringstream ss(s);
  std::string tok;
  while (ss >> tok) p.push_back(Int(tok));
  return p;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

std::vector<CorpusCheck> verify_corpus_entry(const CorpusEntry& entry) {
  std::vector<CorpusCheck> out;
  const bool is_fn = std::holds_alternative<ZFunction>(entry.data);
  const ZFunction* fn = is_fn ? &std::get<ZFunction>(entry.data) : nullptr;
  const ZSet set = is_fn ? fn->domain() : std::get<ZSet>(entry.data);

  for (const auto& [key, expected] : entry.expected) {
    CorpusCheck chk;
    chk.key = key;
    chk.expected = expected;
    const auto at = key.find('@');
    const std::string base = at == std::string::npos ? key : key.substr(0, at);
    const ZPoint arg = at == std::string::npos ? ZPoint{} : parse_coords(key.substr(at + 1));

    if (base == "is_ic") {
      const bool v = is_fn ? is_integrally_convex_function(*fn).is_ic
                           : is_integrally_convex_set(set).is_ic;
      chk.actual = v ? "true" : "false";
    } else if (base == "hole_free") {
      chk.actual = hull_report(set).hole_free ? "true" : "false";
    } else if (base == "hull_integral") {
      chk.actual = hull_report(set).all_vertices_integral ? "true" : "false";
    } else if (base == "directions_pm1") {
      chk.actual = hull_report(set).directions_in_pm1 ? "true" : "false";
    } else if (base == "subgrad") {
      const auto dec = integral_subdifferential_nonempty(
          is_fn ? *fn : indicator(set), arg);
      chk.actual = dec.nonempty ? "nonempty" : "empty";
    } else if (base == "conj") {
      chk.actual = integral_conjugate(is_fn ? *fn : indicator(set), arg).str();
    } else if (base == "biconj") {
      const ExtVal v = integral_biconjugate(is_fn ? *fn : indicator(set), arg);
      chk.actual = v.is_plus_inf() ? "inf" : rat_to_string(v.finite());
    } else if (base == "minimizer") {
      chk.actual =
          is_global_minimizer(is_fn ? *fn : indicator(set), arg) ? "true" : "false";
    } else {
      chk.actual = "unknown-key";
    }
    chk.pass = chk.actual == chk.expected;
    out.push_back(std::move(chk));
  }
  return out;
}

ZFunction separable_function(const ZPoint& lo, const ZPoint& hi,
                             const std::vector<std::vector<Int>>& phi) {
  const int n = static_cast<int>(lo.size());
  if (static_cast<int>(phi.size()) != n)
    throw std::invalid_argument("separable_function: need one sequence per coordinate");
  for (int i = 0; i < n; ++i) {
    const auto len = static_cast<std::size_t>(static_cast<long>(hi[i] - lo[i])) + 1;
    if (phi[i].size() != len)
      throw std::invalid_argument("separable_function: sequence length mismatch");
    for (std::size_t t = 2; t < phi[i].size(); ++t)
      if (phi[i][t] - 2 * phi[i][t - 1] + phi[i][t - 2] < 0)
        throw std::invalid_argument("separable_function: sequence is not convex");
  }
  ZFunction f = tabulate(lo, hi, [&](const ZPoint& x) {
    Int v = 0;
    for (int i = 0; i < n; ++i)
      v += phi[i][static_cast<std::size_t>(static_cast<long>(x[i] - lo[i]))];
    return v;
  });
  if (!is_integrally_convex_function(f).is_ic)
    throw std::logic_error("separable_function: checker rejected a separable sum");
  return f;
}

namespace {

std::vector<Int> random_convex_sequence(int len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> curv(0, 3), slope0(-3, 3), base(-5, 5);
  std::vector<Int> phi(len);
  Int v = base(rng);
  Int s = slope0(rng);
  for (int t = 0; t < len; ++t) {
    phi[t] = v;
    v += s;
    s += curv(rng);
  }
  return phi;
}

}  // namespace

ZFunction gen_separable(int n, const ZPoint& lo, const ZPoint& hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Int>> phi;
  for (int i = 0; i < n; ++i)
    phi.push_back(random_convex_sequence(
        static_cast<int>(static_cast<long>(hi[i] - lo[i])) + 1, rng));
  return separable_function(lo, hi, phi);
}

ZFunction gen_lnat_style(int n, const ZPoint& lo, const ZPoint& hi,
                         const std::vector<std::vector<Int>>& weights,
                         std::uint64_t seed) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (weights[i][j] < 0)
        throw std::invalid_argument("gen_lnat_style: weights must be nonnegative");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Int>> phi;
  for (int i = 0; i < n; ++i)
    phi.push_back(random_convex_sequence(
        static_cast<int>(static_cast<long>(hi[i] - lo[i])) + 1, rng));
  ZFunction f = tabulate(lo, hi, [&](const ZPoint& x) {
    Int v = 0;
    for (int i = 0; i < n; ++i) {
      v += phi[i][static_cast<std::size_t>(static_cast<long>(x[i] - lo[i]))];
      for (int j = i + 1; j < n; ++j) v += weights[i][j] * iabs(x[i] - x[j]);
    }
    return v;
  });
  if (!is_integrally_convex_function(f).is_ic)
    throw std::logic_error("gen_lnat_style: checker rejected the instance");
  return f;
}

ZFunction gen_lnat_random(int n, const ZPoint& lo, const ZPoint& hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<int> w(0, 2);
  std::vector<std::vector<Int>> weights(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) weights[i][j] = w(rng);
  return gen_lnat_style(n, lo, hi, weights, seed);
}

RandomIcResult gen_random_ic(int n, const ZPoint& lo, const ZPoint& hi,
                             const Int& value_lo, const Int& value_hi,
                             std::uint64_t seed, int max_attempts) {
  if (n > 4) throw std::invalid_argument("gen_random_ic: n must be at most 4");
  for (int i = 0; i < n; ++i)
    if (hi[i] - lo[i] > 4)
      throw std::invalid_argument("gen_random_ic: box width must be at most 4");
  if (value_lo > value_hi) throw std::invalid_argument("gen_random_ic: bad value range");
  std::mt19937_64 rng(seed);
  const long span = static_cast<long>(Int(value_hi - value_lo));
  std::uniform_int_distribution<long> val(0, span);
  std::uniform_int_distribution<int> coin(0, 1);

  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    ZFunction f;
    f.dim = n;
    if (n == 1) {
      std::vector<Int> phi = random_convex_sequence(
          static_cast<int>(static_cast<long>(hi[0] - lo[0])) + 1, rng);
      for (long t = 0; t < static_cast<long>(phi.size()); ++t)
        f.table.emplace(ZPoint{Int(lo[0] + t)}, phi[t]);
    } else if (attempt % 2 == 1) {
      // Random values on a random nonempty subset of a unit cube slice.
      ZPoint clo = lo, chi = lo;
      for (int i = 0; i < n; ++i) chi[i] = std::min(Int(lo[i] + 1), hi[i]);
      for_each_box_point(clo, chi, [&](const ZPoint& x) {
        if (coin(rng)) f.table.emplace(x, value_lo + Int(val(rng)));
      });
      if (f.table.empty()) f.table.emplace(clo, value_lo + Int(val(rng)));
    } else {
      // Separable convex base plus a small perturbation, full box.
      std::vector<std::vector<Int>> phi;
      for (int i = 0; i < n; ++i)
        phi.push_back(random_convex_sequence(
            static_cast<int>(static_cast<long>(hi[i] - lo[i])) + 1, rng));
      std::uniform_int_distribution<int> noise(0, 1);
      f = tabulate(lo, hi, [&](const ZPoint& x) {
        Int v = 0;
        for (int i = 0; i < n; ++i)
          v += phi[i][static_cast<std::size_t>(static_cast<long>(x[i] - lo[i]))];
        return v;
      });
      // Perturb a single point upward; convexity usually survives.
      auto it = f.table.begin();
      std::advance(it, static_cast<long>(rng() % f.table.size()));
      it->second += noise(rng);
    }
    if (is_integrally_convex_function(f).is_ic)
      return RandomIcResult{std::move(f), attempt};
  }
  throw std::runtime_error("gen_random_ic: gave up after max_attempts");
}

}  // namespace icx
