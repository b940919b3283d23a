// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "icx/rational.hpp"
#include "icx/zfunction.hpp"

namespace icx {

/// Difference pair g - h. h must be integrally convex; g is arbitrary.
/// The domains must overlap.
struct DcInstance {
  ZFunction g;
  ZFunction h;
};

struct DcReport {
  ExtVal primal;  // inf over x of g(x) - h(x)
  ExtVal dual;    // inf over p of h*(p) - g*(p)
  std::optional<ZPoint> primal_argmin;
  std::optional<ZPoint> dual_argmin;
  bool equal = false;
};

/// Evaluates both sides of the duality identity
///   inf_x { g(x) - h(x) } = inf_p { h*(p) - g*(p) }.
/// The primal side is exhausted over dom g; the dual side is minimized
/// over the integer subgradients of h at every domain point plus a sample
/// box of radius sample_radius, which contains a dual optimum because a
/// subgradient of h at the primal argmin attains it. When some x has
/// g(x) finite but h(x) = +inf both sides are -inf (certified by
/// separation from conv(dom h)).
DcReport toland_singer(const DcInstance& inst, int sample_radius = 2);

}  // namespace icx
