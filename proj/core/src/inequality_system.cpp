// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#include "icx/inequality_system.hpp"

#include <algorithm>
#include <map>

namespace icx {

void IneqSystem::add_row(RatVec coeffs, Rat rhs) {
  if (static_cast<int>(coeffs.size()) != dim)
    throw std::invalid_argument("IneqSystem::add_row: dimension mismatch");
  rows.push_back(LinRow{std::move(coeffs), std::move(rhs)});
}

bool IneqSystem::satisfied_by(const RatVec& p) const {
  for (const auto& r : rows)
    if (!r.satisfied_by(p)) return false;
  return true;
}

std::string IneqSystem::str() const {
  std::string s;
  for (const auto& r : rows) {
    bool first = true;
    for (int j = 0; j < dim; ++j) {
      if (r.coeffs[j] == 0) continue;
      if (!first) s += " + ";
      s += rat_to_string(r.coeffs[j]) + "*p" + std::to_string(j + 1);
      first = false;
    }
    if (first) s += "0";
    s += " <= " + rat_to_string(r.rhs) + "\n";
  }
  return s;
}

LinRow normalize_row(LinRow row) {
  // Common denominator first, then divide by the gcd of the numerators.
  Int lcm = 1;
  for (const Rat& c : row.coeffs) lcm = boost::multiprecision::lcm(lcm, rat_den(c));
  Int g = 0;
  for (const Rat& c : row.coeffs) g = boost::multiprecision::gcd(g, Int(rat_num(c) * (lcm / rat_den(c))));
  if (g == 0) return row;  // zero row: 0 <= rhs
  const Rat scale = make_rat(lcm, g);
  for (Rat& c : row.coeffs) c *= scale;
  row.rhs *= scale;
  return row;
}

IneqSystem normalized(const IneqSystem& sys) {
  std::map<RatVec, Rat> tightest;
  for (const auto& r : sys.rows) {
    LinRow nr = normalize_row(r);
    auto it = tightest.find(nr.coeffs);
    if (it == tightest.end())
      tightest.emplace(std::move(nr.coeffs), std::move(nr.rhs));
    else if (nr.rhs < it->second)
      it->second = nr.rhs;
  }
  IneqSystem out(sys.dim);
  for (auto& [coeffs, rhs] : tightest) out.rows.push_back(LinRow{coeffs, rhs});
  return out;
}

}  // namespace icx
