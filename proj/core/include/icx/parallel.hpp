// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace icx {

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Results must
/// be written to preallocated slots; reductions happen after the join so
/// outcomes stay deterministic.
inline void parallel_for(long count, int threads, const std::function<void(long)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  const int nw = static_cast<int>(std::min<long>(threads, count));
  std::vector<std::thread> workers;
  for (int w = 0; w < nw; ++w) {
    workers.emplace_back([&, w] {
      for (long i = w; i < count; i += nw) fn(i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace icx
