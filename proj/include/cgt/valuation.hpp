#pragma once

#include <stdexcept>
#include <string>

#include "cgt/quaternion.hpp"
#include "cgt/rational.hpp"

namespace cgt {

// The valuation model on nonzero rational quaternions:
//
//     w(q) = v2(nrd(q)).
//
// Because the rational Hamilton quaternions stay a division algebra over the
// 2-adic numbers, w is additive on products and ultrametric on sums:
//
//     w(p*q) = w(p) + w(q),      w(p + q) >= min(w(p), w(q))  when p + q != 0.
//
// w partitions the nonzero quaternions into three cells by sign, and the
// whole library's axiom checking is phrased against that partition:
//
//     Neg  = { w < 0 },   Unit = { w = 0 },   Pos = { w > 0 },
//
// with the distinguished "lower" subset Neg ∪ Unit (closed under products)
// playing the role of the normal subset whose axioms the uhyp command checks.
enum class Cell { Neg, Unit, Pos };

inline long w(const Quaternion& q) {
  if (q.is_zero()) throw std::domain_error("w: zero quaternion");
  return v2(nrd(q));
}

inline Cell classify(const Quaternion& q) {
  const long v = w(q);
  if (v < 0) return Cell::Neg;
  if (v > 0) return Cell::Pos;
  return Cell::Unit;
}

inline const char* cell_name(Cell c) {
  switch (c) {
    case Cell::Neg: return "neg";
    case Cell::Unit: return "unit";
    case Cell::Pos: return "pos";
  }
  return "?";
}

// Membership in the lower subset Neg ∪ Unit.
inline bool in_lower(const Quaternion& q) { return w(q) <= 0; }

// q lies in Unit * Q^# (a unit-cell element times a nonzero rational scalar)
// iff w(q) is even: scalars have even w since w(alpha) = 2*v2(alpha), and
// conversely alpha = 2^(w(q)/2) scales q into the unit cell.
inline bool in_scaled_units(const Quaternion& q) { return w(q) % 2 == 0; }

// The scalar witnessing an even-w decomposition q = (q/alpha) * alpha.
inline Rational scaled_unit_scalar(const Quaternion& q) {
  const long v = w(q);
  if (v % 2 != 0)
    throw std::domain_error("scaled_unit_scalar: odd valuation");
  return pow2(v / 2);
}

}  // namespace cgt
