// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "icx/zfunction.hpp"

namespace icx {

/// Named instance with machine-checkable expected properties. Keys:
///   is_ic, hole_free, hull_integral, directions_pm1   -> "true"/"false"
///   subgrad@<coords>                                   -> "empty"/"nonempty"
///   conj@<coords>, biconj@<coords>                     -> integer or "inf"
///   minimizer@<coords>                                 -> "true"/"false"
struct CorpusEntry {
  std::string name;
  std::string note;
  Instance data;
  std::map<std::string, std::string> expected;
};

/// The bundled instance collection, also shipped as corpus/<name>.icx.
const std::vector<CorpusEntry>& corpus();

struct CorpusCheck {
  std::string key;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Recomputes every expected property of an entry.
std::vector<CorpusCheck> verify_corpus_entry(const CorpusEntry& entry);

/// Separable sum of per-coordinate convex integer sequences; phi[i][t] is
/// the value at lo[i] + t. Rejects sequences with a negative second
/// difference. The result is checker-verified.
ZFunction separable_function(const ZPoint& lo, const ZPoint& hi,
                             const std::vector<std::vector<Int>>& phi);

/// Random convex per-coordinate sequences on the box. Deterministic per seed.
ZFunction gen_separable(int n, const ZPoint& lo, const ZPoint& hi, std::uint64_t seed);

/// f(x) = sum_{i<j} weights[i][j] |x_i - x_j| + separable part on the box,
/// with nonnegative integer weights. Checker-verified; a rejection here
/// would mean a generator or checker bug.
ZFunction gen_lnat_style(int n, const ZPoint& lo, const ZPoint& hi,
                         const std::vector<std::vector<Int>>& weights,
                         std::uint64_t seed);

/// Random weights and separable part. Deterministic per seed.
ZFunction gen_lnat_random(int n, const ZPoint& lo, const ZPoint& hi, std::uint64_t seed);

/// Rejection-sampled random integrally convex function: random values on a
/// random domain, resampled until the checker accepts. Requires n <= 4 and
/// box width <= 4.
struct RandomIcResult {
  ZFunction f;
  int attempts = 0;
};
RandomIcResult gen_random_ic(int n, const ZPoint& lo, const ZPoint& hi,
                             const Int& value_lo, const Int& value_hi,
                             std::uint64_t seed, int max_attempts = 200);

}  // namespace icx
