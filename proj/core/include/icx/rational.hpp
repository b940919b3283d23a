// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace icx {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, kept in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

/// Point in Q^n.
using RatVec = std::vector<Rat>;

/// Builds num/den; den may be negative or zero (zero throws).
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num);
  r /= den;
  return r;
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rat& r) { return rat_den(r) == 1; }

/// Largest integer <= r.
inline Int floor_rat(const Rat& r) {
  Int q = rat_num(r) / rat_den(r);
  if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
  return q;
}

/// Smallest integer >= r.
inline Int ceil_rat(const Rat& r) {
  Int q = rat_num(r) / rat_den(r);
  if (rat_num(r) > 0 && q * rat_den(r) != rat_num(r)) ++q;
  return q;
}

/// Canonical rendering: "num/den", plain integers without "/1".
inline std::string rat_to_string(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  RatVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  RatVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline RatVec scale(const Rat& t, const RatVec& a) {
  RatVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = t * a[i];
  return c;
}

inline bool is_zero(const RatVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

std::string vec_to_string(const RatVec& v);

/// Value in Q union {+inf, -inf}. -inf arises only as a sup over an empty set.
class ExtVal {
 public:
  enum class Kind { Finite, PlusInf, MinusInf };

  ExtVal() : kind_(Kind::Finite), value_(0) {}
  ExtVal(Rat v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT: implicit by design
  ExtVal(const Int& v) : kind_(Kind::Finite), value_(v) {}      // NOLINT
  ExtVal(int v) : kind_(Kind::Finite), value_(v) {}             // NOLINT

  static ExtVal plus_inf() { return ExtVal(Kind::PlusInf); }
  static ExtVal minus_inf() { return ExtVal(Kind::MinusInf); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_plus_inf() const { return kind_ == Kind::PlusInf; }
  bool is_minus_inf() const { return kind_ == Kind::MinusInf; }

  /// Finite payload; throws on infinities.
  const Rat& finite() const {
    if (!is_finite()) throw std::logic_error("ExtVal: not finite");
    return value_;
  }

  ExtVal operator+(const ExtVal& o) const {
    if (is_plus_inf() || o.is_plus_inf()) {
      if (is_minus_inf() || o.is_minus_inf())
        throw std::logic_error("ExtVal: +inf + -inf");
      return plus_inf();
    }
    if (is_minus_inf() || o.is_minus_inf()) return minus_inf();
    return ExtVal(value_ + o.value_);
  }

  ExtVal operator-() const {
    if (is_plus_inf()) return minus_inf();
    if (is_minus_inf()) return plus_inf();
    return ExtVal(-value_);
  }

  ExtVal operator-(const ExtVal& o) const { return *this + (-o); }

  bool operator==(const ExtVal& o) const {
    if (kind_ != o.kind_) return false;
    return kind_ != Kind::Finite || value_ == o.value_;
  }
  bool operator!=(const ExtVal& o) const { return !(*this == o); }

  bool operator<(const ExtVal& o) const {
    if (is_minus_inf()) return !o.is_minus_inf();
    if (is_plus_inf()) return false;
    if (o.is_plus_inf()) return true;
    if (o.is_minus_inf()) return false;
    return value_ < o.value_;
  }
  bool operator<=(const ExtVal& o) const { return *this < o || *this == o; }
  bool operator>(const ExtVal& o) const { return o < *this; }
  bool operator>=(const ExtVal& o) const { return o <= *this; }

  std::string str() const {
    if (is_plus_inf()) return "+inf";
    if (is_minus_inf()) return "-inf";
    return rat_to_string(value_);
  }

 private:
  explicit ExtVal(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Rat value_;
};

inline std::string vec_to_string(const RatVec& v, const char* sep) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += rat_to_string(v[i]);
  }
  return s + ")";
}

inline std::string vec_to_string(const RatVec& v) { return vec_to_string(v, ","); }

}  // namespace icx
