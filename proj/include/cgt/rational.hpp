#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgt {

// Exact arbitrary-precision arithmetic. cpp_rational keeps gcd(|num|, den) = 1
// and den > 0 as internal invariants, which is exactly the contract we need.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 2-adic valuation: exponent of 2 in the numerator minus exponent in the
// denominator.
inline long v2(const Rational& r) {
  if (r == 0) throw std::domain_error("v2: zero has no 2-adic valuation");
  const BigInt num = boost::multiprecision::abs(numerator(r));
  const BigInt den = denominator(r);
  return static_cast<long>(lsb(num)) - static_cast<long>(lsb(den));
}

// Exact power of two as a rational, any sign of exponent.
inline Rational pow2(long e) {
  BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
  return e >= 0 ? Rational(p) : Rational(1, p);
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace cgt
